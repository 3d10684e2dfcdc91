#include "fracint/bounds.hpp"

#include "fracint/primes.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace fracint {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("binomial needs n >= 0");
  if (k < 0 || k > n) return BigInt(0);
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt binomial_sum(std::int64_t n, std::int64_t lo, std::int64_t hi) {
  BigInt total = 0;
  for (auto j = std::max<std::int64_t>(lo, 0); j <= hi && j <= n; ++j) total += binomial(n, j);
  return total;
}

double g_value(int t, std::int64_t n, GVariant variant) {
  if (t < 1 || n < 1) throw std::invalid_argument("g(t, n) needs t >= 1 and n >= 1");
  const double base = 2.0 * t + std::log(static_cast<double>(n));
  const double g = base / std::log(base);
  return variant == GVariant::statement ? 2.0 * g : g;
}

std::vector<std::uint64_t> prime_window(int t, std::int64_t n, std::optional<int> c1) {
  if (t < 1 || n < 1) throw std::invalid_argument("prime window needs t >= 1 and n >= 1");
  std::vector<std::uint64_t> window;
  std::uint64_t p = static_cast<std::uint64_t>(t);
  if (c1) {
    if (*c1 < 1) throw std::invalid_argument("c1 must be a positive integer");
    for (int i = 0; i < *c1; ++i) window.push_back(p = next_prime(p));
    return window;
  }
  BigInt product = 1;
  while (product <= n) {
    p = next_prime(p);
    window.push_back(p);
    product *= p;
  }
  return window;
}

BigInt fi_bound(std::int64_t n, int s, int i) {
  if (s < 1 || i < 1) throw std::invalid_argument("fi_bound needs s >= 1 and i >= 1");
  return i < s ? binomial(n, s) + binomial(n, i) : binomial(n, s);
}

int ceil_log(std::uint64_t base, std::uint64_t value) {
  if (base < 2) throw std::invalid_argument("logarithm base must be at least 2");
  int k = 0;
  BigInt power = 1;
  while (power < value) {
    power *= base;
    ++k;
  }
  return k;
}

std::string to_string(BoundCase kind) {
  switch (kind) {
    case BoundCase::general: return "general";
    case BoundCase::case_a: return "case_a";
    case BoundCase::case_b: return "case_b";
    case BoundCase::uniform: return "uniform";
    case BoundCase::singleton_prime_b: return "singleton_prime_b";
    case BoundCase::large_sets: return "large_sets";
    case BoundCase::window: return "window";
  }
  return "unknown";
}

namespace {

std::string decimal(double value) {
  std::ostringstream out;
  out << std::setprecision(10) << value;
  return out.str();
}

BoundEntry exact_entry(BoundCase kind, const BigInt& value, std::string condition) {
  return {kind, value.str(), value.convert_to<double>(), true, std::move(condition)};
}

BoundEntry real_entry(BoundCase kind, double value, std::string condition) {
  return {kind, decimal(value), value, false, std::move(condition)};
}

}  // namespace

BoundReport theorem1_bound(std::int64_t n, const LSet& l, GVariant variant) {
  BoundReport r;
  r.n = n;
  r.s = static_cast<int>(l.size());
  r.t = static_cast<int>(std::max<std::int64_t>(r.s, l.max_denominator()));
  r.variant = variant;
  r.g_value = g_value(r.t, n, variant);
  r.g_value_other_variant =
      g_value(r.t, n, variant == GVariant::statement ? GVariant::proof : GVariant::statement);

  const BigInt top = binomial(n, r.s);
  const BigInt lower = binomial_sum(n, 1, r.s - 1);
  const double top_d = top.convert_to<double>();
  const double lower_d = lower.convert_to<double>();
  const double g = r.g_value;
  const double glng = g * std::log(g);

  r.prime_window = prime_window(r.t, n);
  BigInt prime_sum = 0;
  for (auto p : r.prime_window) prime_sum += p;
  const auto width = static_cast<std::int64_t>(r.prime_window.size());
  r.exact_prime_bound = (prime_sum - width) * top + width * lower;

  r.closed_form_bound = 2.0 * top_d * g * glng + lower_d * g;
  if (r.s <= static_cast<double>(n) + 1.0 - 2.0 * glng) r.case_a_bound = 2.0 * top_d * g * glng;

  r.c1 = r.t <= n ? static_cast<int>(n - r.t + 1) : 1;
  r.c1_window = prime_window(r.t, n, r.c1);
  r.case_b_bound = 2.0 * r.c1 * top_d * glng + r.c1 * lower_d;
  r.uniform_bound = top;

  r.entries.push_back(real_entry(BoundCase::general, r.closed_form_bound, "any family"));
  r.entries.push_back(exact_entry(BoundCase::general, r.exact_prime_bound,
                                  "any family (exact prime-window form)"));
  if (r.case_a_bound) {
    r.entries.push_back(real_entry(BoundCase::case_a, *r.case_a_bound, "s <= n + 1 - 2 g ln g"));
  }
  r.entries.push_back(real_entry(BoundCase::case_b, r.case_b_bound,
                                 "t > n - c1 with c1 = " + std::to_string(r.c1)));
  r.entries.push_back(exact_entry(BoundCase::uniform, top, "family is t-uniform"));
  return r;
}

BigInt theorem2_bound(std::int64_t n, const Fraction& frac) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (frac.is_zero()) return BigInt(n);
  const auto b = static_cast<std::uint64_t>(frac.denominator());
  if (!is_prime(b)) {
    throw std::invalid_argument("singleton bound needs a prime denominator; " + std::to_string(b) +
                                " is composite");
  }
  return BigInt(b - 1) * (n + 1) * ceil_log(b, static_cast<std::uint64_t>(n)) + 1;
}

Rational theorem3_threshold(const LSet& l) {
  const auto& top = l.max();
  const Rational alt(4 * top.numerator() - top.denominator(), 2 * top.denominator());
  const Rational half(1, 2);
  return alt > half ? alt : half;
}

bool SizeWindow::contains(int size) const {
  const Rational offset = Rational(size) - center;
  return offset * offset <= radius_squared;
}

SizeWindow theorem4_window(std::int64_t n, const Fraction& frac, const Rational& delta) {
  if (frac.is_zero()) throw std::invalid_argument("size window is undefined for a = 0");
  if (delta <= 1) throw std::invalid_argument("delta must exceed 1");
  if (n < 1) throw std::invalid_argument("n must be positive");
  const auto a = frac.numerator();
  const auto b = frac.denominator();
  SizeWindow w;
  w.center = Rational(b * n, 4 * (b - a));
  w.radius_squared = Rational(b * b * n, 16 * a * a) / (delta * delta);
  const double radius = std::sqrt(w.radius_squared.convert_to<double>());
  const double center = w.center.convert_to<double>();
  const auto lo = static_cast<std::int64_t>(std::floor(center - radius)) - 1;
  const auto hi = static_cast<std::int64_t>(std::ceil(center + radius)) + 1;
  for (auto k = std::max<std::int64_t>(lo, 0); k <= std::min(hi, n); ++k) {
    if (w.contains(static_cast<int>(k))) w.sizes.push_back(static_cast<int>(k));
  }
  return w;
}

Rational theorem4_bound(std::int64_t n, const Rational& delta) {
  if (delta <= 1) throw std::invalid_argument("delta must exceed 1");
  const Rational d2 = delta * delta;
  return d2 / (d2 - 1) * n;
}

BoundReport all_bounds(std::int64_t n, const LSet& l, std::optional<Rational> delta,
                       GVariant variant) {
  auto report = theorem1_bound(n, l, variant);
  if (l.size() == 1) {
    const auto& frac = l.max();
    if (frac.is_zero()) {
      report.entries.push_back(exact_entry(BoundCase::singleton_prime_b, theorem2_bound(n, frac),
                                           "L = {0}"));
    } else if (is_prime(static_cast<std::uint64_t>(frac.denominator()))) {
      report.entries.push_back(exact_entry(BoundCase::singleton_prime_b, theorem2_bound(n, frac),
                                           "singleton L with prime denominator"));
    }
  }
  const auto alpha = theorem3_threshold(l);
  report.entries.push_back(exact_entry(BoundCase::large_sets, BigInt(theorem3_bound(n)),
                                       "every member has |A| > " + to_string(alpha) + " n"));
  if (delta && l.size() == 1 && !l.max().is_zero()) {
    const auto window = theorem4_window(n, l.max(), *delta);
    const auto bound = theorem4_bound(n, *delta);
    std::string sizes = window.sizes.empty()
                            ? std::string("(empty)")
                            : std::to_string(window.sizes.front()) + ".." +
                                  std::to_string(window.sizes.back());
    report.entries.push_back({BoundCase::window, "< " + to_string(bound), bound.convert_to<double>(),
                              true, "every member size in " + sizes + " (delta = " +
                                        to_string(*delta) + ")"});
  }
  return report;
}

}  // namespace fracint
