#include "report.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace fracint::cli {

namespace {

Json labels(const Subset& s) { return Json(s.elements()); }

Json primes_json(const std::vector<std::uint64_t>& primes) { return Json(primes); }

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

void render_node(std::ostream& out, const std::string& key, const Json& v, int indent);

void render_table(std::ostream& out, const Json& rows, int indent) {
  std::vector<std::string> columns;
  for (const auto& row : rows) {
    for (const auto& [k, _] : row.items()) {
      if (std::find(columns.begin(), columns.end(), k) == columns.end()) columns.push_back(k);
    }
  }
  std::vector<std::size_t> width(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    width[c] = columns[c].size();
    for (const auto& row : rows) {
      if (row.contains(columns[c])) width[c] = std::max(width[c], cell(row[columns[c]]).size());
    }
  }
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  out << pad;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    out << std::left << std::setw(static_cast<int>(width[c]) + 2) << columns[c];
  }
  out << '\n';
  for (const auto& row : rows) {
    out << pad;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const std::string text = row.contains(columns[c]) ? cell(row[columns[c]]) : "";
      out << std::left << std::setw(static_cast<int>(width[c]) + 2) << text;
    }
    out << '\n';
  }
}

void render_node(std::ostream& out, const std::string& key, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    out << pad << key << ":\n";
    for (const auto& [k, child] : v.items()) render_node(out, k, child, indent + 2);
    return;
  }
  if (v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_object(); })) {
    out << pad << key << ":\n";
    render_table(out, v, indent + 2);
    return;
  }
  if (v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_array(); })) {
    out << pad << key << ":\n";
    for (const auto& inner : v) {
      out << pad << "  ";
      for (std::size_t i = 0; i < inner.size(); ++i) out << (i ? " " : "") << cell(inner[i]);
      out << '\n';
    }
    return;
  }
  if (v.is_array()) {
    out << pad << key << ": ";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << cell(v[i]);
    out << '\n';
    return;
  }
  out << pad << key << ": " << cell(v) << '\n';
}

}  // namespace

Json family_json(const Family& family) {
  Json sets = Json::array();
  for (const auto& m : family) sets.push_back(labels(m));
  return Json{{"n", family.ground_n()}, {"size", family.size()}, {"sets", std::move(sets)}};
}

Json verification_json(const Family& family, const VerificationReport& report, std::size_t listing_cap) {
  Json violations = Json::array();
  for (const auto& pair : report.violations) {
    if (violations.size() == listing_cap) break;
    violations.push_back(Json{{"first", labels(family[pair.first])}, {"second", labels(family[pair.second])}});
  }
  return Json{{"valid", report.valid},
              {"violation_count", report.violations.size()},
              {"violations", std::move(violations)},
              {"violations_truncated", report.violations.size() > listing_cap}};
}

Json bound_json(const BoundReport& report) {
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    entries.push_back(Json{{"kind", to_string(e.kind)},
                           {"value", e.value},
                           {"exact", e.exact},
                           {"condition", e.condition}});
  }
  Json out{{"n", report.n},
           {"s", report.s},
           {"t", report.t},
           {"g_variant", report.variant == GVariant::statement ? "statement" : "proof"},
           {"g_value", report.g_value},
           {"g_value_other_variant", report.g_value_other_variant},
           {"prime_window", primes_json(report.prime_window)},
           {"exact_prime_bound", to_string(report.exact_prime_bound)},
           {"closed_form_bound", report.closed_form_bound},
           {"case_a_bound", report.case_a_bound ? Json(*report.case_a_bound) : Json(nullptr)},
           {"c1", report.c1},
           {"c1_window", primes_json(report.c1_window)},
           {"case_b_bound", report.case_b_bound},
           {"uniform_bound", to_string(report.uniform_bound)},
           {"entries", std::move(entries)}};
  return out;
}

Json search_json(const SearchResult& result, const LSet& l) {
  return Json{{"size", result.size},
              {"optimal", result.optimal},
              {"limits_hit", Json{{"time", result.limits_hit.time}, {"nodes", result.limits_hit.nodes}}},
              {"verified", verify_family(result.best_family, l, false).valid}};
}

Json extremal_row_json(const ExtremalRow& row) {
  Json out{{"n", row.n},
           {"vertices", row.vertices},
           {"size", row.size},
           {"optimal", row.optimal},
           {"heuristic", row.heuristic},
           {"exact_prime_bound", to_string(row.exact_prime_bound)},
           {"singleton_bound", row.singleton_bound ? Json(to_string(*row.singleton_bound)) : Json(nullptr)}};
  out["attains_three_halves"] = row.attains_three_halves ? Json(*row.attains_three_halves) : Json(nullptr);
  return out;
}

Json independence_json(const IndependenceReport& report) {
  return Json{{"members", report.members},
              {"rank", report.rank},
              {"full_rank", report.full_rank},
              {"diagonal_pattern", report.diagonal_pattern},
              {"evaluation_points", report.evaluation_points},
              {"monomial_rank", report.monomial_rank ? Json(*report.monomial_rank) : Json(nullptr)}};
}

Json swallow_json(const SwallowReport& report) {
  return Json{{"members", report.members},
              {"multipliers", report.multipliers},
              {"rank", report.rank},
              {"expected_rank", report.expected_rank},
              {"passed", report.passed}};
}

Json matrix_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json alon_json(const AlonReport& report) {
  return Json{{"rank", report.rank},
              {"trace", to_string(report.trace)},
              {"trace_of_square", to_string(report.trace_of_square)},
              {"trace_ratio", to_string(report.trace_ratio)},
              {"lower_bound", to_string(report.lower_bound)},
              {"rank_dominates_ratio", report.rank_dominates_ratio},
              {"ratio_dominates_bound", report.ratio_dominates_bound},
              {"holds", report.holds()}};
}

Json choice_json(const ChoiceSearchResult& result) {
  Json values = Json::array();
  for (const auto& v : result.witness.values) values.push_back(to_string(v));
  return Json{{"values", std::move(values)},
              {"min_rank", result.min_rank},
              {"assignment", result.assignment},
              {"exhaustive", result.exhaustive},
              {"matrices_examined", result.matrices_examined},
              {"witness", matrix_json(result.witness.matrix)}};
}

void render(std::ostream& out, const Json& report) {
  for (const auto& [key, value] : report.items()) {
    if (key == "results" && value.is_object()) {
      for (const auto& [k, v] : value.items()) render_node(out, k, v, 0);
    } else if (key != "inputs") {
      render_node(out, key, value, 0);
    }
  }
}

}  // namespace fracint::cli
