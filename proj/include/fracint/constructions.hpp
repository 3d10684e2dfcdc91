// Explicit family constructions: the tightness examples, the two bisection-closed
// families of size 3n/2 - 2, the large even-set avoiding family and random
// approximately bisecting families.
#ifndef FRACINT_CONSTRUCTIONS_HPP
#define FRACINT_CONSTRUCTIONS_HPP

#include "fracint/family.hpp"
#include "fracint/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace fracint {

/// Largest ground set accepted by generators that enumerate subsets of [n].
inline constexpr int kExhaustiveGroundCap = 24;

struct ConstructionOutput {
  std::string name;
  Family family;
  /// Absent for constructions judged by a different property (avoiding).
  std::optional<LSet> intended_L;
  BigInt claimed_size;
  std::optional<VerificationReport> verified;
};

/// All non-empty subsets of [n] of size <= n - c, with L the irreducible
/// fractions in [0,1) of denominator <= n - c.
ConstructionOutput example1_family(int n, int c = 0, bool verify = true);

/// All s-subsets of [n] with L = {0/s, ..., (s-1)/s} reduced.
ConstructionOutput uniform_family(int n, int s, bool verify = true);

/// {1,i} for 2 <= i <= n together with {1,2,2j-1,2j} for 2 <= j <= n/2; n even, n >= 4.
ConstructionOutput star_block_family(int n, bool verify = true);

/// Sylvester matrix H(k): H(0) = [1], H(k) = [H H; H -H].
MatrixX<int> sylvester_hadamard(int k);

/// Rows of [H H; H -H; H J] built from H(k-1), with rows 1 and 2^k + 1 removed
/// and -1 entries read as membership. The verification is computed.
ConstructionOutput hadamard_family(int k, bool verify = true);

/// Even subsets of [n] with more than 2n/3 elements; verified with is_avoiding.
ConstructionOutput avoiding_family(int n, bool verify = true);

/// m distinct non-empty subsets of [n], each uniform over all subsets
/// (std::mt19937_64 seeded with `seed`; duplicates and the empty set are redrawn).
Family random_approx_family(int n, int m, std::uint64_t seed);

/// A pair passes when |A∩B|/|A| or |A∩B|/|B| lies in the open interval
/// (1/2 - eps, 1/2 + eps). Throws for eps outside (0, 1/2) or empty members.
VerificationReport approx_verify(const Family& family, const Rational& eps);

struct ApproxSampleSummary {
  int n = 0;
  int m = 0;
  Rational eps;
  int trials = 0;
  int successes = 0;
  double frequency = 0.0;
  /// exp(2 eps^2 n / 75): the family size the random construction guarantees.
  double size_claim = 0.0;
};

/// Monte-Carlo: fraction of `trials` random m-member families that pass approx_verify.
ApproxSampleSummary sample_approx(int n, int m, const Rational& eps, int trials, std::uint64_t seed);

}  // namespace fracint

#endif  // FRACINT_CONSTRUCTIONS_HPP
