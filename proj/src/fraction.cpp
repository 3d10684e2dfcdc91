#include "fracint/fraction.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace fracint {

namespace {

std::string_view trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

std::int64_t parse_int(std::string_view text, std::string_view context) {
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw std::invalid_argument("malformed integer '" + std::string(text) + "' in " +
                                std::string(context));
  }
  return value;
}

}  // namespace

Fraction::Fraction(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0) throw std::invalid_argument("fraction denominator must be positive");
  if (numerator < 0) throw std::invalid_argument("fraction numerator must be non-negative");
  if (numerator >= denominator) {
    throw std::invalid_argument("fraction " + std::to_string(numerator) + "/" +
                                std::to_string(denominator) + " is not below 1");
  }
  if (numerator == 0) return;
  const auto g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

std::string Fraction::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::strong_ordering operator<=>(const Fraction& lhs, const Fraction& rhs) noexcept {
  // Denominators are positive, so cross-multiplication preserves order.
  const auto left = static_cast<__int128>(lhs.num_) * rhs.den_;
  const auto right = static_cast<__int128>(rhs.num_) * lhs.den_;
  return left <=> right;
}

Fraction parse_fraction(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Fraction(parse_int(text, "fraction"), 1);
  }
  return Fraction(parse_int(trim(text.substr(0, slash)), "fraction numerator"),
                  parse_int(trim(text.substr(slash + 1)), "fraction denominator"));
}

LSet::LSet(std::vector<Fraction> fractions) : fractions_(std::move(fractions)) {
  if (fractions_.empty()) throw std::invalid_argument("L must contain at least one fraction");
  std::sort(fractions_.begin(), fractions_.end());
  const auto dup = std::adjacent_find(fractions_.begin(), fractions_.end());
  if (dup != fractions_.end()) {
    throw std::invalid_argument("L lists " + dup->str() + " more than once (after reduction)");
  }
}

std::int64_t LSet::max_denominator() const noexcept {
  std::int64_t best = 1;
  for (const auto& f : fractions_) best = std::max(best, f.denominator());
  return best;
}

std::string LSet::str() const {
  std::string out;
  for (const auto& f : fractions_) {
    if (!out.empty()) out += ',';
    out += f.str();
  }
  return out;
}

LSet parse_lset(std::string_view text) {
  std::vector<Fraction> fractions;
  while (true) {
    const auto comma = text.find(',');
    const auto token = trim(text.substr(0, comma));
    if (token.empty()) throw std::invalid_argument("empty token in L specification");
    fractions.push_back(parse_fraction(token));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return LSet(std::move(fractions));
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, "rational"));
  const auto den = parse_int(trim(text.substr(slash + 1)), "rational denominator");
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(parse_int(trim(text.substr(0, slash)), "rational numerator"), den);
}

std::string to_string(const Rational& value) {
  const auto num = mp::numerator(value);
  const auto den = mp::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace fracint
