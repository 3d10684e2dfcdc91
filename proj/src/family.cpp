#include "fracint/family.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <sstream>
#include <tuple>

namespace fracint {

Family::Family(int ground_n, std::vector<Subset> members)
    : ground_n_(ground_n), members_(std::move(members)) {
  if (ground_n < 1) throw std::invalid_argument("ground set size must be positive");
  for (const auto& m : members_) {
    if (m.ground_n() != ground_n) {
      throw std::invalid_argument("member {" + m.str() + "} is over a different ground set");
    }
  }
  std::sort(members_.begin(), members_.end());
  const auto dup = std::adjacent_find(members_.begin(), members_.end());
  if (dup != members_.end()) {
    throw std::invalid_argument("member {" + dup->str() + "} appears more than once");
  }
}

namespace {

std::string_view strip(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_label(std::string_view token, int line) {
  int value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Family parse_family(std::istream& in) {
  std::string raw;
  int line_no = 0;
  std::optional<int> ground_n;
  std::vector<Subset> members;
  std::map<Subset, int> first_seen;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = strip(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!ground_n) {
      if (line.substr(0, 2) != "n=") throw ParseError(line_no, "expected header 'n=<int>'");
      const int n = parse_label(strip(line.substr(2)), line_no);
      if (n < 1) throw ParseError(line_no, "ground set size must be positive");
      ground_n = n;
      continue;
    }
    std::vector<int> labels;
    std::istringstream tokens{std::string(line)};
    std::string token;
    while (tokens >> token) labels.push_back(parse_label(token, line_no));
    if (!std::is_sorted(labels.begin(), labels.end()) ||
        std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
      throw ParseError(line_no, "labels must be strictly ascending");
    }
    try {
      members.push_back(Subset::from_elements(*ground_n, labels));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    if (auto [it, fresh] = first_seen.emplace(members.back(), line_no); !fresh) {
      throw ParseError(line_no, "set repeats line " + std::to_string(it->second));
    }
  }
  if (!ground_n) throw ParseError(line_no + 1, "missing header 'n=<int>'");
  return Family(*ground_n, std::move(members));
}

Family parse_family(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_family(in);
}

void write_family(std::ostream& out, const Family& family) {
  out << "n=" << family.ground_n() << '\n';
  for (const auto& m : family) out << m.str() << '\n';
}

std::string format_family(const Family& family) {
  std::ostringstream out;
  write_family(out, family);
  return out.str();
}

namespace {

std::optional<Fraction> certify(int meet, int size_a, int size_b, const LSet& l) {
  for (const auto& f : l) {
    const auto lhs = static_cast<std::int64_t>(meet) * f.denominator();
    if (lhs == f.numerator() * size_a || lhs == f.numerator() * size_b) return f;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Fraction> is_fractional_pair(const Subset& a, const Subset& b, const LSet& l) {
  if (a.ground_n() != b.ground_n()) throw std::invalid_argument("sets over different ground sets");
  if (a == b) throw std::invalid_argument("the pair condition applies to distinct sets only");
  return certify(intersection_size(a, b), a.cardinality(), b.cardinality(), l);
}

VerificationReport verify_family(const Family& family, const LSet& l, bool collect_witnesses) {
  VerificationReport report;
  const auto& members = family.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const auto witness = certify(intersection_size(members[i], members[j]),
                                   members[i].cardinality(), members[j].cardinality(), l);
      if (!witness) {
        report.violations.push_back({i, j});
      } else if (collect_witnesses) {
        report.pair_witnesses.push_back({{i, j}, *witness});
      }
    }
  }
  report.valid = report.violations.empty();
  return report;
}

VerificationReport verify_avoiding(const Family& family) {
  for (const auto& m : family) {
    if (m.cardinality() % 2 != 0) {
      throw std::invalid_argument("member {" + m.str() + "} has odd size " +
                                  std::to_string(m.cardinality()));
    }
  }
  // Pairs are examined only between size classes whose attainable intersection
  // range [max(0, k + l - n), min(k, l)] (minus one within a class) holds k/2 or l/2.
  const auto& members = family.members();
  const int n = family.ground_n();
  std::map<int, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < members.size(); ++i) classes[members[i].cardinality()].push_back(i);
  const auto may_bisect = [n](int k, int l) {
    const int lo = std::max(0, k + l - n);
    const int hi = k == l ? k - 1 : std::min(k, l);
    return (lo <= k / 2 && k / 2 <= hi) || (lo <= l / 2 && l / 2 <= hi);
  };
  VerificationReport report;
  const auto check = [&](std::size_t i, std::size_t j) {
    const int meet = 2 * intersection_size(members[i], members[j]);
    if (meet == members[i].cardinality() || meet == members[j].cardinality()) {
      report.violations.push_back({std::min(i, j), std::max(i, j)});
    }
  };
  for (auto first = classes.begin(); first != classes.end(); ++first) {
    for (auto second = first; second != classes.end(); ++second) {
      if (!may_bisect(first->first, second->first)) continue;
      const auto& xs = first->second;
      const auto& ys = second->second;
      for (std::size_t a = 0; a < xs.size(); ++a) {
        for (std::size_t b = first == second ? a + 1 : 0; b < ys.size(); ++b) check(xs[a], ys[b]);
      }
    }
  }
  std::sort(report.violations.begin(), report.violations.end(), [](const IndexPair& x, const IndexPair& y) {
    return std::tie(x.first, x.second) < std::tie(y.first, y.second);
  });
  report.valid = report.violations.empty();
  return report;
}

bool is_avoiding(const Family& family) { return verify_avoiding(family).valid; }

std::optional<int> uniformity(const Family& family) {
  if (family.empty()) throw std::invalid_argument("uniformity of an empty family is undefined");
  const int t = family[0].cardinality();
  for (const auto& m : family) {
    if (m.cardinality() != t) return std::nullopt;
  }
  return t;
}

std::vector<int> induced_classical_L(int t, const LSet& l) {
  if (t < 1) throw std::invalid_argument("uniform size t must be positive");
  std::vector<int> out;
  for (const auto& f : l) out.push_back(static_cast<int>(f.numerator() * t / f.denominator()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace fracint
