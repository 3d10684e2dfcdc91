#include "fracint/algebra.hpp"

#include "fracint/primes.hpp"

#include <bit>
#include <map>
#include <stdexcept>

namespace fracint {

BigIntMatrix clear_denominators(const RationalMatrix& m) {
  BigIntMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    BigInt scale = 1;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const BigInt den = mp::denominator(m(i, j));
      scale = scale / mp::gcd(scale, den) * den;
    }
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out(i, j) = mp::numerator(m(i, j)) * (scale / mp::denominator(m(i, j)));
    }
  }
  return out;
}

Eigen::Index rank_rational(const RationalMatrix& m) {
  BigIntMatrix work = clear_denominators(m);
  return bareiss_rank_in_place(work);
}

namespace {

std::int64_t mod(std::int64_t value, std::int64_t p) {
  const auto r = value % p;
  return r < 0 ? r + p : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

void require_prime(std::int64_t p) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  }
}

}  // namespace

std::int64_t mod_inverse(std::int64_t value, std::int64_t p) {
  std::int64_t a = mod(value, p);
  if (a == 0) throw std::invalid_argument("zero has no inverse mod " + std::to_string(p));
  // Extended Euclid on (a, p).
  std::int64_t old_r = a, r = p, old_s = 1, s = 0;
  while (r != 0) {
    const auto q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) throw std::invalid_argument("value not invertible mod " + std::to_string(p));
  return mod(old_s, p);
}

PrimeFieldMatrix::PrimeFieldMatrix(MatrixX<std::int64_t> entries, std::int64_t p)
    : entries_(std::move(entries)), p_(p) {
  require_prime(p);
  if ((entries_.array() < 0).any() || (entries_.array() >= p).any()) {
    throw std::invalid_argument("entries must lie in [0, p)");
  }
}

PrimeFieldMatrix PrimeFieldMatrix::reduce(const BigIntMatrix& m, std::int64_t p) {
  require_prime(p);
  MatrixX<std::int64_t> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      BigInt r = m(i, j) % p;
      if (r < 0) r += p;
      out(i, j) = r.convert_to<std::int64_t>();
    }
  }
  return PrimeFieldMatrix(std::move(out), p);
}

Eigen::Index rank_mod_p(const PrimeFieldMatrix& matrix) {
  MatrixX<std::int64_t> m = matrix.entries();
  const auto p = matrix.modulus();
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = rank;
    while (pivot < rows && m(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) m.row(pivot).swap(m.row(rank));
    const auto inv = mod_inverse(m(rank, col), p);
    for (Eigen::Index j = col; j < cols; ++j) m(rank, j) = mul_mod(m(rank, j), inv, p);
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      const auto factor = m(i, col);
      if (factor == 0) continue;
      for (Eigen::Index j = col; j < cols; ++j) {
        m(i, j) = mod(m(i, j) - mul_mod(factor, m(rank, j), p), p);
      }
    }
    ++rank;
  }
  return rank;
}

namespace {

struct ResidueSetup {
  std::int64_t p = 0;
  std::int64_t residue = 0;
  int n = 0;
  std::vector<std::uint64_t> masks;
  /// (a_l / b_l) * i in F_p.
  std::vector<std::int64_t> roots;
};

ResidueSetup prepare(const Family& cls, const LSet& l, int residue, std::int64_t p) {
  require_prime(p);
  const auto s = static_cast<std::int64_t>(l.size());
  const auto t = std::max(s, l.max_denominator());
  if (p <= t) {
    throw std::invalid_argument("prime " + std::to_string(p) + " must exceed t = " + std::to_string(t));
  }
  ResidueSetup setup;
  setup.p = p;
  setup.residue = mod(residue, p);
  if (setup.residue == 0) throw std::invalid_argument("residue must be nonzero mod p");
  setup.n = cls.ground_n();
  if (setup.n > kEvaluationGroundCap) {
    throw std::invalid_argument("evaluation over {0,1}^n is capped at n = " +
                                std::to_string(kEvaluationGroundCap));
  }
  for (const auto& member : cls) {
    if (mod(member.cardinality(), p) != setup.residue) {
      throw std::invalid_argument("member {" + member.str() + "} is not in residue class " +
                                  std::to_string(setup.residue) + " mod " + std::to_string(p));
    }
    setup.masks.push_back(member.words()[0]);
  }
  for (const auto& f : l) {
    if (f.denominator() % p == 0) throw std::invalid_argument("p divides a denominator of L");
    setup.roots.push_back(
        mul_mod(mul_mod(f.numerator(), mod_inverse(f.denominator(), p), p), setup.residue, p));
  }
  return setup;
}

std::int64_t evaluate(const ResidueSetup& setup, std::uint64_t member, std::uint64_t point) {
  const std::int64_t dot = std::popcount(member & point);
  std::int64_t value = 1;
  for (auto root : setup.roots) value = mul_mod(value, mod(dot - root, setup.p), setup.p);
  return value;
}

MatrixX<std::int64_t> evaluation_rows(const ResidueSetup& setup) {
  const std::uint64_t points = std::uint64_t{1} << setup.n;
  MatrixX<std::int64_t> out(static_cast<Eigen::Index>(setup.masks.size()),
                            static_cast<Eigen::Index>(points));
  for (std::size_t j = 0; j < setup.masks.size(); ++j) {
    for (std::uint64_t x = 0; x < points; ++x) {
      out(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(x)) = evaluate(setup, setup.masks[j], x);
    }
  }
  return out;
}

// Multilinear expansion of f_j, reducing x_e^2 = x_e, as monomial mask -> coefficient.
std::map<std::uint64_t, std::int64_t> expand(const ResidueSetup& setup, std::uint64_t member) {
  std::map<std::uint64_t, std::int64_t> poly{{0, 1}};
  for (auto root : setup.roots) {
    std::map<std::uint64_t, std::int64_t> next;
    for (const auto& [mono, coef] : poly) {
      auto& constant = next[mono];
      constant = mod(constant - mul_mod(coef, root, setup.p), setup.p);
      for (std::uint64_t bits = member; bits != 0; bits &= bits - 1) {
        auto& term = next[mono | (bits & (~bits + 1))];
        term = mod(term + coef, setup.p);
      }
    }
    poly = std::move(next);
  }
  return poly;
}

}  // namespace

IndependenceReport independence_check(const Family& cls, const LSet& l, int residue, std::int64_t p,
                                      bool monomial_cross_check) {
  const auto setup = prepare(cls, l, residue, p);
  IndependenceReport report;
  report.members = cls.size();
  report.evaluation_points = std::size_t{1} << setup.n;
  report.rank = rank_mod_p(PrimeFieldMatrix(evaluation_rows(setup), p));
  report.full_rank = report.rank == static_cast<Eigen::Index>(report.members);

  report.diagonal_pattern = true;
  for (std::size_t j = 0; j < setup.masks.size(); ++j) {
    for (std::size_t k = 0; k < setup.masks.size(); ++k) {
      const bool zero = evaluate(setup, setup.masks[j], setup.masks[k]) == 0;
      if (zero == (j == k)) report.diagonal_pattern = false;
    }
  }

  if (monomial_cross_check) {
    std::vector<std::map<std::uint64_t, std::int64_t>> polys;
    std::map<std::uint64_t, Eigen::Index> column;
    for (auto mask : setup.masks) {
      polys.push_back(expand(setup, mask));
      for (const auto& [mono, coef] : polys.back()) {
        if (coef != 0) column.emplace(mono, 0);
      }
    }
    Eigen::Index next = 0;
    for (auto& [mono, index] : column) index = next++;
    MatrixX<std::int64_t> coefficients = MatrixX<std::int64_t>::Zero(
        static_cast<Eigen::Index>(polys.size()), std::max<Eigen::Index>(next, 1));
    for (std::size_t j = 0; j < polys.size(); ++j) {
      for (const auto& [mono, coef] : polys[j]) {
        if (coef != 0) coefficients(static_cast<Eigen::Index>(j), column.at(mono)) = coef;
      }
    }
    report.monomial_rank = rank_mod_p(PrimeFieldMatrix(std::move(coefficients), p));
  }
  return report;
}

SwallowReport swallow_check(const Family& cls, const LSet& l, int residue, std::int64_t p) {
  const auto setup = prepare(cls, l, residue, p);
  const auto s = static_cast<int>(l.size());
  const std::uint64_t points = std::uint64_t{1} << setup.n;

  std::vector<std::uint64_t> multipliers;
  for (std::uint64_t a = 0; a < points; ++a) {
    const int size = std::popcount(a);
    if (size < s && mod(size, p) != setup.residue) multipliers.push_back(a);
  }

  MatrixX<std::int64_t> rows(static_cast<Eigen::Index>(setup.masks.size() + multipliers.size()),
                             static_cast<Eigen::Index>(points));
  rows.topRows(static_cast<Eigen::Index>(setup.masks.size())) = evaluation_rows(setup);
  for (std::size_t k = 0; k < multipliers.size(); ++k) {
    const auto row = static_cast<Eigen::Index>(setup.masks.size() + k);
    for (std::uint64_t x = 0; x < points; ++x) {
      // x_A(x) f(x) with f(x) = |x| - i
      const bool covers = (x & multipliers[k]) == multipliers[k];
      rows(row, static_cast<Eigen::Index>(x)) =
          covers ? mod(std::popcount(x) - setup.residue, p) : 0;
    }
  }

  SwallowReport report;
  report.members = cls.size();
  report.multipliers = multipliers.size();
  report.expected_rank = static_cast<Eigen::Index>(report.members + report.multipliers);
  report.rank = rank_mod_p(PrimeFieldMatrix(std::move(rows), p));
  report.passed = report.rank == report.expected_rank;
  return report;
}

Family residue_class(const Family& family, std::int64_t p, int residue) {
  std::vector<Subset> members;
  for (const auto& m : family) {
    if (mod(m.cardinality(), p) == mod(residue, p)) members.push_back(m);
  }
  return Family(family.ground_n(), std::move(members));
}

namespace {

MatrixX<int> pm1_incidence(const Family& family) {
  MatrixX<int> x = MatrixX<int>::Constant(static_cast<Eigen::Index>(family.size()), family.ground_n(), -1);
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (int e : family[i].elements()) x(static_cast<Eigen::Index>(i), e - 1) = 1;
  }
  return x;
}

}  // namespace

RationalMatrix gram_pm1(const Family& family) {
  const MatrixX<int> x = pm1_incidence(family);
  const MatrixX<int> gram = x * x.transpose();
  return gram.cast<Rational>();
}

ScaledGramReport gram_scaled(const Family& family, const Fraction& frac, const Rational& delta) {
  const int n = family.ground_n();
  const auto window = theorem4_window(n, frac, delta);
  for (const auto& m : family) {
    if (!window.contains(m.cardinality())) {
      throw std::invalid_argument("member {" + m.str() + "} has size outside the window");
    }
  }
  ScaledGramReport report;
  report.gram = gram_pm1(family) / Rational(n);
  report.limit_squared = Rational(1) / (delta * delta * n);
  report.unit_diagonal = (report.gram.diagonal().array() == Rational(1)).all();
  report.max_off_diagonal_squared = 0;
  for (Eigen::Index i = 0; i < report.gram.rows(); ++i) {
    for (Eigen::Index j = 0; j < report.gram.cols(); ++j) {
      if (i == j) continue;
      const Rational sq = report.gram(i, j) * report.gram(i, j);
      if (sq > report.max_off_diagonal_squared) report.max_off_diagonal_squared = sq;
    }
  }
  report.off_diagonal_within = report.max_off_diagonal_squared <= report.limit_squared;
  report.rank = rank_rational(report.gram);
  return report;
}

AlonReport alon_rank_check(const RationalMatrix& m, const Rational& eps) {
  if (m.rows() != m.cols() || m.rows() == 0) throw std::invalid_argument("matrix must be square and non-empty");
  if (eps < 0) throw std::invalid_argument("eps must be non-negative");
  const auto size = m.rows();
  for (Eigen::Index i = 0; i < size; ++i) {
    if (m(i, i) != 1) throw std::invalid_argument("diagonal entry " + std::to_string(i + 1) + " is not 1");
    for (Eigen::Index j = i + 1; j < size; ++j) {
      if (m(i, j) != m(j, i)) throw std::invalid_argument("matrix is not symmetric");
      if (mp::abs(m(i, j)) > eps) {
        throw std::invalid_argument("off-diagonal entry exceeds eps in magnitude");
      }
    }
  }
  AlonReport report;
  report.rank = rank_rational(m);
  report.trace = m.trace();
  report.trace_of_square = (m * m).trace();
  report.trace_ratio = report.trace * report.trace / report.trace_of_square;
  report.lower_bound = Rational(size) / (1 + (size - 1) * eps * eps);
  report.rank_dominates_ratio = Rational(report.rank) >= report.trace_ratio;
  report.ratio_dominates_bound = report.trace_ratio >= report.lower_bound;
  return report;
}

}  // namespace fracint
