#ifndef FRACINT_FRACTION_HPP
#define FRACINT_FRACTION_HPP

#include "fracint/numeric.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fracint {

/// Irreducible a/b with 0 <= a/b < 1. Zero is stored as 0/1.
class Fraction {
 public:
  Fraction() = default;

  /// Reduces a/b. Throws std::invalid_argument for b <= 0, a < 0 or a/b >= 1.
  Fraction(std::int64_t numerator, std::int64_t denominator);

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }

  Rational value() const { return Rational(num_, den_); }
  std::string str() const;

  friend bool operator==(const Fraction&, const Fraction&) = default;
  // Orders by value, not lexicographically.
  friend std::strong_ordering operator<=>(const Fraction& lhs, const Fraction& rhs) noexcept;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Fraction make_fraction(std::int64_t a, std::int64_t b) { return Fraction(a, b); }

/// Parses `a/b` (or a bare `0`).
Fraction parse_fraction(std::string_view text);

/// Non-empty set of pairwise distinct fractions, kept sorted by value.
class LSet {
 public:
  /// Throws std::invalid_argument when empty or when two entries reduce to the same value.
  explicit LSet(std::vector<Fraction> fractions);

  const std::vector<Fraction>& fractions() const noexcept { return fractions_; }
  std::size_t size() const noexcept { return fractions_.size(); }
  auto begin() const noexcept { return fractions_.begin(); }
  auto end() const noexcept { return fractions_.end(); }

  const Fraction& max() const noexcept { return fractions_.back(); }
  std::int64_t max_denominator() const noexcept;
  bool contains_zero() const noexcept { return fractions_.front().is_zero(); }

  /// Comma-separated `a/b` tokens.
  std::string str() const;

  friend bool operator==(const LSet&, const LSet&) = default;

 private:
  std::vector<Fraction> fractions_;
};

/// Parses the comma-separated text form, e.g. `1/2,1/3`.
LSet parse_lset(std::string_view text);

}  // namespace fracint

#endif  // FRACINT_FRACTION_HPP
