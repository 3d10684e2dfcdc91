#ifndef FRACINT_PRIMES_HPP
#define FRACINT_PRIMES_HPP

#include <cstdint>
#include <vector>

namespace fracint {

bool is_prime(std::uint64_t value) noexcept;

/// Smallest prime strictly greater than `value`.
std::uint64_t next_prime(std::uint64_t value) noexcept;

/// Primes p with lo < p <= hi, ascending.
std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi);

}  // namespace fracint

#endif  // FRACINT_PRIMES_HPP
