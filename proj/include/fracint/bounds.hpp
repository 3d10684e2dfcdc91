// Upper bounds on the size of fractional L-intersecting families, with the
// intermediate quantities of the residue-class argument exposed for checking.
#ifndef FRACINT_BOUNDS_HPP
#define FRACINT_BOUNDS_HPP

#include "fracint/fraction.hpp"
#include "fracint/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fracint {

/// Exact C(n, k); zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// sum_{j=lo}^{hi} C(n, j); zero for an empty range.
BigInt binomial_sum(std::int64_t n, std::int64_t lo, std::int64_t hi);

/// Two published forms of g(t, n) differ by a factor of 2. `statement` is
/// 2(2t + ln n) / ln(2t + ln n); `proof` drops the leading 2.
enum class GVariant { statement, proof };

double g_value(int t, std::int64_t n, GVariant variant = GVariant::statement);

/// Without c1: the shortest run of consecutive primes above t whose product
/// exceeds n. With c1: exactly the first c1 primes above t.
std::vector<std::uint64_t> prime_window(int t, std::int64_t n, std::optional<int> c1 = std::nullopt);

/// Per-residue-class bound: C(n,s) + C(n,i) if i < s, else C(n,s).
BigInt fi_bound(std::int64_t n, int s, int i);

/// Smallest k >= 0 with base^k >= value, in integer arithmetic.
int ceil_log(std::uint64_t base, std::uint64_t value);

enum class BoundCase { general, case_a, case_b, uniform, singleton_prime_b, large_sets, window };

std::string to_string(BoundCase kind);

struct BoundEntry {
  BoundCase kind = BoundCase::general;
  /// Exact integer or rational when `exact`, otherwise a decimal rendering.
  std::string value;
  double approx = 0.0;
  bool exact = false;
  /// Hypothesis under which the bound applies.
  std::string condition;
};

struct BoundReport {
  std::int64_t n = 0;
  int s = 0;
  int t = 0;
  GVariant variant = GVariant::statement;
  double g_value = 0.0;
  double g_value_other_variant = 0.0;
  std::vector<std::uint64_t> prime_window;
  /// (sum p - |P|) C(n,s) + |P| sum_{j=1}^{s-1} C(n,j) over the window P.
  BigInt exact_prime_bound;
  double closed_form_bound = 0.0;
  std::optional<double> case_a_bound;
  int c1 = 1;
  std::vector<std::uint64_t> c1_window;
  double case_b_bound = 0.0;
  /// C(n,s): the bound for t-uniform families.
  BigInt uniform_bound;
  std::vector<BoundEntry> entries;
};

/// General bound with cases (a), (b), the uniform-family bound and the exact
/// prime-window bound. s = |L|, t = max(s, max denominator).
BoundReport theorem1_bound(std::int64_t n, const LSet& l, GVariant variant = GVariant::statement);

/// Singleton L = {a/b} with b prime: n when a = 0, else
/// (b-1)(n+1) ceil(log_b n) + 1. Throws std::invalid_argument for composite b.
BigInt theorem2_bound(std::int64_t n, const Fraction& frac);

/// alpha = max(1/2, (4a - b) / (2b)) for a/b = max L. Families whose members all
/// exceed alpha*n have at most n members.
Rational theorem3_threshold(const LSet& l);
inline std::int64_t theorem3_bound(std::int64_t n) { return n; }

/// Integer cardinalities k with |k - b n / (4(b-a))| <= b sqrt(n) / (4 a delta).
struct SizeWindow {
  Rational center;
  Rational radius_squared;
  std::vector<int> sizes;

  bool contains(int size) const;
};

/// Throws std::invalid_argument for a = 0 or delta <= 1.
SizeWindow theorem4_window(std::int64_t n, const Fraction& frac, const Rational& delta);
/// delta^2 / (delta^2 - 1) * n, exact. Window families are strictly smaller.
Rational theorem4_bound(std::int64_t n, const Rational& delta);

/// Every applicable bound for (n, L): theorem1_bound plus the singleton,
/// large-set and (when delta is given) window bounds.
BoundReport all_bounds(std::int64_t n, const LSet& l, std::optional<Rational> delta = std::nullopt,
                       GVariant variant = GVariant::statement);

}  // namespace fracint

#endif  // FRACINT_BOUNDS_HPP
