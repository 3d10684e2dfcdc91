// JSON payloads for the command-line tool and their plain-text rendering.
#ifndef FRACINT_TOOLS_REPORT_HPP
#define FRACINT_TOOLS_REPORT_HPP

#include "fracint/algebra.hpp"
#include "fracint/bounds.hpp"
#include "fracint/constructions.hpp"
#include "fracint/family.hpp"
#include "fracint/search.hpp"

#include <json.hpp>

#include <iosfwd>

namespace fracint::cli {

// Insertion-ordered so that the key order is fixed by the code, not by hashing.
using Json = nlohmann::ordered_json;

Json family_json(const Family& family);
Json verification_json(const Family& family, const VerificationReport& report,
                       std::size_t listing_cap = 1000);
Json bound_json(const BoundReport& report);
Json search_json(const SearchResult& result, const LSet& l);
Json extremal_row_json(const ExtremalRow& row);
Json independence_json(const IndependenceReport& report);
Json swallow_json(const SwallowReport& report);
Json matrix_json(const RationalMatrix& m);
Json alon_json(const AlonReport& report);
Json choice_json(const ChoiceSearchResult& result);

/// Plain-text rendering of a run report: scalars as `key: value`, arrays of
/// objects as aligned tables, arrays of arrays one per line.
void render(std::ostream& out, const Json& report);

}  // namespace fracint::cli

#endif  // FRACINT_TOOLS_REPORT_HPP
