#include "fracint/constructions.hpp"

#include "fracint/bounds.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace fracint {

namespace {

void require_exhaustive(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > kExhaustiveGroundCap) {
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the enumeration cap of " +
                                std::to_string(kExhaustiveGroundCap));
  }
}

// Appends every size-k subset of [n] in increasing mask order (Gosper's hack).
void append_subsets_of_size(int n, int k, std::vector<Subset>& out) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    out.emplace_back(n);
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = (std::uint64_t{1} << k) - 1; mask < limit;) {
    out.push_back(Subset::from_mask(n, mask));
    const std::uint64_t low = mask & (~mask + 1);
    const std::uint64_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
}

void attach_verification(ConstructionOutput& out, bool verify) {
  if (!verify) return;
  out.verified = out.intended_L ? verify_family(out.family, *out.intended_L)
                                : verify_avoiding(out.family);
}

}  // namespace

ConstructionOutput example1_family(int n, int c, bool verify) {
  require_exhaustive(n);
  if (c < 0 || c >= n) throw std::invalid_argument("need 0 <= c < n");
  const int top = n - c;
  std::vector<Subset> members;
  for (int k = 1; k <= top; ++k) append_subsets_of_size(n, k, members);

  std::vector<Fraction> fractions{Fraction(0, 1)};
  for (int b = 2; b <= top; ++b) {
    for (int a = 1; a < b; ++a) {
      if (std::gcd(a, b) == 1) fractions.emplace_back(a, b);
    }
  }

  ConstructionOutput out{"example1", Family(n, std::move(members)), LSet(std::move(fractions)),
                         binomial_sum(n, 1, top), std::nullopt};
  attach_verification(out, verify);
  return out;
}

ConstructionOutput uniform_family(int n, int s, bool verify) {
  require_exhaustive(n);
  if (s < 1 || s > n) throw std::invalid_argument("need 1 <= s <= n");
  std::vector<Subset> members;
  append_subsets_of_size(n, s, members);
  std::vector<Fraction> fractions;
  for (int j = 0; j < s; ++j) fractions.emplace_back(j, s);
  ConstructionOutput out{"uniform", Family(n, std::move(members)), LSet(std::move(fractions)),
                         binomial(n, s), std::nullopt};
  attach_verification(out, verify);
  return out;
}

ConstructionOutput star_block_family(int n, bool verify) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("star-block needs an even n >= 4");
  std::vector<Subset> members;
  for (int i = 2; i <= n; ++i) members.push_back(Subset::from_elements(n, {1, i}));
  for (int j = 2; j <= n / 2; ++j) {
    members.push_back(Subset::from_elements(n, {1, 2, 2 * j - 1, 2 * j}));
  }
  ConstructionOutput out{"star-block", Family(n, std::move(members)), LSet({Fraction(1, 2)}),
                         BigInt(3 * n / 2 - 2), std::nullopt};
  attach_verification(out, verify);
  return out;
}

MatrixX<int> sylvester_hadamard(int k) {
  if (k < 0 || k > 20) throw std::invalid_argument("Hadamard order exponent out of range");
  MatrixX<int> h = MatrixX<int>::Ones(1, 1);
  for (int level = 0; level < k; ++level) {
    const auto size = h.rows();
    MatrixX<int> next(2 * size, 2 * size);
    next << h, h, h, -h;
    h = std::move(next);
  }
  return h;
}

ConstructionOutput hadamard_family(int k, bool verify) {
  if (k < 2) throw std::invalid_argument("Hadamard family needs k >= 2");
  if (k > 16) throw std::invalid_argument("Hadamard family capped at k = 16");
  const MatrixX<int> h = sylvester_hadamard(k - 1);
  const auto half = h.rows();
  const int n = static_cast<int>(2 * half);

  MatrixX<int> stacked(3 * half, 2 * half);
  stacked << h, h, h, -h, h, MatrixX<int>::Ones(half, half);

  // 1-based rows 1 and 2^k + 1 are dropped.
  const Eigen::Index skip_first = 0;
  const Eigen::Index skip_second = 2 * half;
  std::vector<Subset> members;
  for (Eigen::Index row = 0; row < stacked.rows(); ++row) {
    if (row == skip_first || row == skip_second) continue;
    Subset set(n);
    for (Eigen::Index col = 0; col < stacked.cols(); ++col) {
      if (stacked(row, col) == -1) set.insert(static_cast<int>(col) + 1);
    }
    members.push_back(std::move(set));
  }
  ConstructionOutput out{"hadamard", Family(n, std::move(members)), LSet({Fraction(1, 2)}),
                         BigInt(3 * n / 2 - 2), std::nullopt};
  attach_verification(out, verify);
  return out;
}

ConstructionOutput avoiding_family(int n, bool verify) {
  require_exhaustive(n);
  if (n < 3) throw std::invalid_argument("avoiding family needs n >= 3");
  std::vector<Subset> members;
  BigInt claimed = 0;
  for (int j = 0; j <= n; j += 2) {
    if (3 * j <= 2 * n) continue;
    append_subsets_of_size(n, j, members);
    claimed += binomial(n, j);
  }
  ConstructionOutput out{"avoiding", Family(n, std::move(members)), std::nullopt, claimed,
                         std::nullopt};
  attach_verification(out, verify);
  return out;
}

Family random_approx_family(int n, int m, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (n < 63 && static_cast<std::uint64_t>(m) > (std::uint64_t{1} << n) - 1) {
    throw std::invalid_argument("m exceeds the number of non-empty subsets of [n]");
  }
  std::mt19937_64 rng(seed);
  std::set<Subset> seen;
  std::vector<Subset> members;
  const int words = word_count(n);
  const int tail_bits = n % Subset::kWordBits;
  while (static_cast<int>(members.size()) < m) {
    Subset draw(n);
    for (int w = 0; w < words; ++w) {
      std::uint64_t bits = rng();
      if (w == words - 1 && tail_bits != 0) bits &= (std::uint64_t{1} << tail_bits) - 1;
      for (; bits != 0; bits &= bits - 1) draw.insert(w * Subset::kWordBits + std::countr_zero(bits) + 1);
    }
    if (draw.empty() || !seen.insert(draw).second) continue;
    members.push_back(std::move(draw));
  }
  return Family(n, std::move(members));
}

VerificationReport approx_verify(const Family& family, const Rational& eps) {
  if (eps <= 0 || eps >= Rational(1, 2)) throw std::invalid_argument("eps must lie in (0, 1/2)");
  for (const auto& member : family) {
    if (member.empty()) throw std::invalid_argument("ratio undefined for the empty set");
  }
  const BigInt p = mp::numerator(eps);
  const BigInt q = mp::denominator(eps);
  // |k/s - 1/2| < p/q  <=>  q |2k - s| < 2 p s
  const auto near_half = [&](int meet, int size) {
    return q * std::abs(2 * meet - size) < 2 * p * size;
  };
  VerificationReport report;
  const auto& members = family.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const int meet = intersection_size(members[i], members[j]);
      if (!near_half(meet, members[i].cardinality()) && !near_half(meet, members[j].cardinality())) {
        report.violations.push_back({i, j});
      }
    }
  }
  report.valid = report.violations.empty();
  return report;
}

ApproxSampleSummary sample_approx(int n, int m, const Rational& eps, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  ApproxSampleSummary summary{n, m, eps, trials, 0, 0.0, 0.0};
  std::mt19937_64 seeds(seed);
  for (int trial = 0; trial < trials; ++trial) {
    if (approx_verify(random_approx_family(n, m, seeds()), eps).valid) ++summary.successes;
  }
  summary.frequency = static_cast<double>(summary.successes) / trials;
  const double e = eps.convert_to<double>();
  summary.size_claim = std::exp(2.0 * e * e * n / 75.0);
  return summary;
}

}  // namespace fracint
