// Exact linear algebra over Q and F_p: ranks, evaluation matrices of the
// residue-class polynomials, Gram matrices of +-1 incidence vectors and the
// choice-matrix rank problem.
#ifndef FRACINT_ALGEBRA_HPP
#define FRACINT_ALGEBRA_HPP

#include "fracint/bounds.hpp"
#include "fracint/family.hpp"
#include "fracint/numeric.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace fracint {

/// Fraction-free Gaussian elimination (Bareiss). Destroys `m`; every division
/// is exact, so Scalar must be an exact integer type wide enough for the
/// largest minor times a second minor.
template <typename Scalar>
Eigen::Index bareiss_rank_in_place(MatrixX<Scalar>& m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Scalar previous(1);
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = rank;
    while (pivot < rows && m(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) m.row(pivot).swap(m.row(rank));
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      for (Eigen::Index j = col + 1; j < cols; ++j) {
        m(i, j) = (m(rank, col) * m(i, j) - m(i, col) * m(rank, j)) / previous;
      }
      m(i, col) = Scalar(0);
    }
    previous = m(rank, col);
    ++rank;
  }
  return rank;
}

template <typename Derived>
Eigen::Index bareiss_rank(const Eigen::MatrixBase<Derived>& m) {
  MatrixX<typename Derived::Scalar> work = m;
  return bareiss_rank_in_place(work);
}

/// Rows scaled by the lcm of their denominators; row scaling keeps the rank.
BigIntMatrix clear_denominators(const RationalMatrix& m);

/// Exact rank over Q.
Eigen::Index rank_rational(const RationalMatrix& m);

std::int64_t mod_inverse(std::int64_t value, std::int64_t p);

/// Matrix over F_p with entries in [0, p).
class PrimeFieldMatrix {
 public:
  /// Throws std::invalid_argument for composite p or out-of-range entries.
  PrimeFieldMatrix(MatrixX<std::int64_t> entries, std::int64_t p);
  /// Reduces an integer matrix mod p.
  static PrimeFieldMatrix reduce(const BigIntMatrix& m, std::int64_t p);

  const MatrixX<std::int64_t>& entries() const noexcept { return entries_; }
  std::int64_t modulus() const noexcept { return p_; }

 private:
  MatrixX<std::int64_t> entries_;
  std::int64_t p_;
};

Eigen::Index rank_mod_p(const PrimeFieldMatrix& m);

/// Evaluation-matrix test of the residue-class polynomials
/// f_j(x) = prod_l (<V_j, x> - (a_l / b_l) i) over F_p on all of {0,1}^n.
struct IndependenceReport {
  std::size_t members = 0;
  Eigen::Index rank = 0;
  bool full_rank = false;
  /// f_j(V_j) != 0 and f_j(V_k) = 0 for k != j.
  bool diagonal_pattern = false;
  std::size_t evaluation_points = 0;
  /// Rank of the multilinear coefficient matrix, when requested.
  std::optional<Eigen::Index> monomial_rank;
};

inline constexpr int kEvaluationGroundCap = 20;

/// Preconditions (std::invalid_argument otherwise): p prime, p > t, every
/// member size is = i (mod p), i != 0 (mod p), n <= kEvaluationGroundCap.
IndependenceReport independence_check(const Family& residue_class, const LSet& l, int residue,
                                      std::int64_t p, bool monomial_cross_check = false);

/// The f_j together with x_A f for f(x) = sum x - i and every A with |A| < s,
/// |A| != i (mod p); passes when the joint rank is m plus the multiplier count.
struct SwallowReport {
  std::size_t members = 0;
  std::size_t multipliers = 0;
  Eigen::Index rank = 0;
  Eigen::Index expected_rank = 0;
  bool passed = false;
};

SwallowReport swallow_check(const Family& residue_class, const LSet& l, int residue, std::int64_t p);

/// Members of `family` whose size is = residue (mod p), in family order.
Family residue_class(const Family& family, std::int64_t p, int residue);

/// Gram matrix of the +-1 incidence vectors; the diagonal is n.
RationalMatrix gram_pm1(const Family& family);

/// Gram matrix of the +-1/sqrt(n) vectors, with the off-diagonal magnitude
/// compared to 1/(delta sqrt(n)) through exact squares.
struct ScaledGramReport {
  RationalMatrix gram;
  bool unit_diagonal = false;
  bool off_diagonal_within = false;
  Rational max_off_diagonal_squared;
  Rational limit_squared;
  Eigen::Index rank = 0;
};

/// Throws std::invalid_argument when a member lies outside theorem4_window(n, frac, delta).
ScaledGramReport gram_scaled(const Family& family, const Fraction& frac, const Rational& delta);

/// rk(A) >= tr(A)^2 / tr(A^2) >= m / (1 + (m-1) eps^2) for symmetric A with
/// unit diagonal and off-diagonal magnitudes at most eps.
struct AlonReport {
  Eigen::Index rank = 0;
  Rational trace;
  Rational trace_of_square;
  Rational trace_ratio;
  Rational lower_bound;
  bool rank_dominates_ratio = false;
  bool ratio_dominates_bound = false;
  bool holds() const noexcept { return rank_dominates_ratio && ratio_dominates_bound; }
};

/// Throws std::invalid_argument naming the violated hypothesis.
AlonReport alon_rank_check(const RationalMatrix& m, const Rational& eps);

/// Symmetric matrix with zero diagonal whose (i, j) entry is a_i or a_j.
struct ChoiceMatrixInstance {
  std::vector<Rational> values;
  RationalMatrix matrix;

  /// Symmetric, zero diagonal, entries drawn from their row/column values,
  /// values ascending.
  bool consistent() const;
  bool distinct_values() const;
};

struct ChoiceBridge {
  RationalMatrix gram;
  ChoiceMatrixInstance instance;
  bool consistent = false;
  Eigen::Index rank = 0;
};

/// X = (nJ - M) / 2 for M the +-1 Gram matrix; values are the member sizes.
/// Throws std::invalid_argument unless the family is bisection-closed.
ChoiceBridge family_to_choice_matrix(const Family& family);

/// Pair (i, j) with i < j takes values[i] when the bit is clear, values[j] when set;
/// pairs are ordered (0,1), (0,2), ..., (1,2), ...
ChoiceMatrixInstance choice_matrix(const std::vector<Rational>& values, std::uint64_t assignment);

inline constexpr int kExhaustiveChoiceCap = 7;

struct ChoiceSearchMode {
  enum class Kind { exhaustive, random };
  Kind kind = Kind::exhaustive;
  std::uint64_t seed = 0;
  int trials = 100;

  static ChoiceSearchMode exhaustive() { return {}; }
  static ChoiceSearchMode random(std::uint64_t seed, int trials) {
    return {Kind::random, seed, trials};
  }
};

struct ChoiceSearchResult {
  Eigen::Index min_rank = 0;
  std::uint64_t assignment = 0;
  ChoiceMatrixInstance witness;
  std::uint64_t matrices_examined = 0;
  bool exhaustive = false;
};

/// Minimum rank over choice matrices for distinct positive ascending values.
/// Exhaustive mode is capped at kExhaustiveChoiceCap values.
ChoiceSearchResult min_rank_choice(const std::vector<Rational>& values, const ChoiceSearchMode& mode);

/// Matrix text format: `rows cols`, then row-major integer or `p/q` entries.
RationalMatrix parse_matrix(std::istream& in);
RationalMatrix parse_matrix(std::string_view text);
void write_matrix(std::ostream& out, const RationalMatrix& m);

}  // namespace fracint

#endif  // FRACINT_ALGEBRA_HPP
