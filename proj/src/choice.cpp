#include "fracint/algebra.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace fracint {

bool ChoiceMatrixInstance::consistent() const {
  const auto size = static_cast<Eigen::Index>(values.size());
  if (matrix.rows() != size || matrix.cols() != size) return false;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < values[i - 1]) return false;
  }
  for (Eigen::Index i = 0; i < size; ++i) {
    if (matrix(i, i) != 0) return false;
    for (Eigen::Index j = i + 1; j < size; ++j) {
      if (matrix(i, j) != matrix(j, i)) return false;
      const auto& entry = matrix(i, j);
      if (entry != values[static_cast<std::size_t>(i)] && entry != values[static_cast<std::size_t>(j)]) {
        return false;
      }
    }
  }
  return true;
}

bool ChoiceMatrixInstance::distinct_values() const {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] == values[i - 1]) return false;
  }
  return true;
}

ChoiceBridge family_to_choice_matrix(const Family& family) {
  if (!verify_family(family, LSet({Fraction(1, 2)}), false).valid) {
    throw std::invalid_argument("family is not bisection-closed");
  }
  const auto m = static_cast<Eigen::Index>(family.size());
  ChoiceBridge bridge;
  bridge.gram = gram_pm1(family);
  const RationalMatrix n_j = RationalMatrix::Constant(m, m, Rational(family.ground_n()));
  bridge.instance.matrix = (n_j - bridge.gram) / Rational(2);
  for (const auto& member : family) bridge.instance.values.emplace_back(member.cardinality());
  bridge.consistent = bridge.instance.consistent();
  bridge.rank = rank_rational(bridge.instance.matrix);
  return bridge;
}

ChoiceMatrixInstance choice_matrix(const std::vector<Rational>& values, std::uint64_t assignment) {
  const auto size = static_cast<Eigen::Index>(values.size());
  ChoiceMatrixInstance out{values, RationalMatrix::Zero(size, size)};
  int bit = 0;
  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index j = i + 1; j < size; ++j, ++bit) {
      const bool take_j = (assignment >> bit) & 1U;
      const auto& v = values[static_cast<std::size_t>(take_j ? j : i)];
      out.matrix(i, j) = v;
      out.matrix(j, i) = v;
    }
  }
  return out;
}

namespace {

void require_choice_values(const std::vector<Rational>& values) {
  if (values.empty()) throw std::invalid_argument("need at least one value");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] <= 0) throw std::invalid_argument("values must be positive");
    if (i > 0 && values[i] <= values[i - 1]) {
      throw std::invalid_argument("values must be distinct and ascending");
    }
  }
}

// Values rescaled to integers; the rank is unaffected.
std::vector<BigInt> integer_values(const std::vector<Rational>& values) {
  BigInt scale = 1;
  for (const auto& v : values) {
    const BigInt den = mp::denominator(v);
    scale = scale / mp::gcd(scale, den) * den;
  }
  std::vector<BigInt> out;
  for (const auto& v : values) out.push_back(mp::numerator(v) * (scale / mp::denominator(v)));
  return out;
}

// Ranks choice matrices over a fixed value list, in __int128 when every
// Bareiss intermediate provably fits (Hadamard bound on two minors), else in BigInt.
class ChoiceRanker {
 public:
  explicit ChoiceRanker(const std::vector<Rational>& values)
      : ints_(integer_values(values)), size_(static_cast<Eigen::Index>(values.size())) {
    double log_max = 0.0;
    for (const auto& v : ints_) log_max = std::max(log_max, std::log2(v.convert_to<double>()));
    const double k = static_cast<double>(size_);
    const double log_minor = k * (0.5 * std::log2(std::max(k, 1.0)) + log_max);
    narrow_ = 2.0 * log_minor + 2.0 < 120.0;
    for (const auto& v : ints_) narrow_values_.push_back(v.convert_to<long long>());
  }

  Eigen::Index rank(std::uint64_t assignment) const {
    return narrow_ ? rank_as<__int128>(assignment, narrow_values_) : rank_as<BigInt>(assignment, ints_);
  }

 private:
  template <typename Scalar, typename Value>
  Eigen::Index rank_as(std::uint64_t assignment, const std::vector<Value>& values) const {
    MatrixX<Scalar> m = MatrixX<Scalar>::Zero(size_, size_);
    int bit = 0;
    for (Eigen::Index i = 0; i < size_; ++i) {
      for (Eigen::Index j = i + 1; j < size_; ++j, ++bit) {
        const bool take_j = (assignment >> bit) & 1U;
        const Scalar v(values[static_cast<std::size_t>(take_j ? j : i)]);
        m(i, j) = v;
        m(j, i) = v;
      }
    }
    return bareiss_rank_in_place(m);
  }

  std::vector<BigInt> ints_;
  std::vector<long long> narrow_values_;
  Eigen::Index size_;
  bool narrow_ = false;
};

}  // namespace

ChoiceSearchResult min_rank_choice(const std::vector<Rational>& values, const ChoiceSearchMode& mode) {
  require_choice_values(values);
  const auto size = values.size();
  const int pairs = static_cast<int>(size * (size - 1) / 2);
  const ChoiceRanker ranker(values);
  ChoiceSearchResult result;
  result.min_rank = static_cast<Eigen::Index>(size) + 1;

  const auto consider = [&](std::uint64_t assignment) {
    ++result.matrices_examined;
    const auto r = ranker.rank(assignment);
    if (r < result.min_rank) {
      result.min_rank = r;
      result.assignment = assignment;
    }
    return r;
  };

  if (mode.kind == ChoiceSearchMode::Kind::exhaustive) {
    if (size > static_cast<std::size_t>(kExhaustiveChoiceCap)) {
      throw std::invalid_argument("exhaustive choice search is capped at " +
                                  std::to_string(kExhaustiveChoiceCap) + " values");
    }
    result.exhaustive = true;
    const std::uint64_t total = std::uint64_t{1} << pairs;
    for (std::uint64_t assignment = 0; assignment < total; ++assignment) consider(assignment);
  } else {
    if (pairs > 63) throw std::invalid_argument("random choice search supports at most 11 values");
    if (mode.trials < 1) throw std::invalid_argument("trials must be positive");
    std::mt19937_64 rng(mode.seed);
    const std::uint64_t mask = pairs == 0 ? 0 : (pairs == 64 ? ~0ULL : (std::uint64_t{1} << pairs) - 1);
    for (int trial = 0; trial < mode.trials; ++trial) {
      std::uint64_t current = rng() & mask;
      auto current_rank = consider(current);
      // Hill descent: take the first single-pair flip that lowers the rank.
      for (bool improved = true; improved;) {
        improved = false;
        for (int bit = 0; bit < pairs; ++bit) {
          const auto flipped = current ^ (std::uint64_t{1} << bit);
          const auto r = consider(flipped);
          if (r < current_rank) {
            current = flipped;
            current_rank = r;
            improved = true;
            break;
          }
        }
      }
    }
  }
  result.witness = choice_matrix(values, result.assignment);
  return result;
}

}  // namespace fracint
