#include "fracint/primes.hpp"

#include <algorithm>

namespace fracint {

bool is_prime(std::uint64_t value) noexcept {
  if (value < 2) return false;
  if (value < 4) return true;
  if (value % 2 == 0 || value % 3 == 0) return false;
  // 6k +- 1 wheel; the arguments here stay far below 2^32.
  for (std::uint64_t d = 5; d * d <= value; d += 6) {
    if (value % d == 0 || value % (d + 2) == 0) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t value) noexcept {
  std::uint64_t candidate = value + 1;
  while (!is_prime(candidate)) ++candidate;
  return candidate;
}

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi <= lo) return out;
  // Sieve of Eratosthenes over [0, hi].
  std::vector<bool> composite(hi + 1, false);
  for (std::uint64_t p = 2; p * p <= hi; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t q = p * p; q <= hi; q += p) composite[q] = true;
  }
  for (std::uint64_t p = std::max<std::uint64_t>(lo + 1, 2); p <= hi; ++p) {
    if (!composite[p]) out.push_back(p);
  }
  return out;
}

}  // namespace fracint
