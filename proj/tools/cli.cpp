#include "cli.hpp"

#include "report.hpp"

#include "fracint/primes.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fracint::cli {

namespace {

using Clock = std::chrono::steady_clock;

// Input problems that are not parse errors of a file (missing seed, bad combination).
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
  int threads = 1;
  Clock::time_point start = Clock::now();
};

Json make_report(const std::string& subcommand, Json inputs) {
  return Json{{"subcommand", subcommand},
              {"tool_version", std::string(kToolVersion)},
              {"inputs", std::move(inputs)}};
}

void emit(Context& ctx, Json report, std::ostream* stream = nullptr) {
  report["wall_time"] = std::chrono::duration<double>(Clock::now() - ctx.start).count();
  auto& out = stream ? *stream : ctx.out;
  if (ctx.json) {
    out << report.dump(2) << '\n';
  } else {
    render(out, report);
  }
}

Family read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open family file '" + path + "'");
  return parse_family(in);
}

RationalMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file '" + path + "'");
  return parse_matrix(in);
}

void write_family_file(const std::string& path, const Family& family) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write family file '" + path + "'");
  write_family(out, family);
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  for (std::string token; std::getline(in, token, ',');) out.push_back(parse_rational(token));
  return out;
}

int lset_t(const LSet& l) {
  return static_cast<int>(std::max<std::int64_t>(static_cast<std::int64_t>(l.size()), l.max_denominator()));
}

std::uint64_t require_seed(const CLI::Option* opt, std::uint64_t seed, const std::string& what) {
  if (opt->count() == 0) throw UsageError(what + " is randomized and needs an explicit --seed");
  return seed;
}

// verify ------------------------------------------------------------------

struct VerifyArgs {
  std::string family_path;
  std::string l_spec;
  std::string mode = "fractional";
  std::string eps;
};

int cmd_verify(Context& ctx, const VerifyArgs& args) {
  const auto family = read_family_file(args.family_path);
  Json inputs{{"family", args.family_path}, {"mode", args.mode}};
  VerificationReport report;
  if (args.mode == "fractional") {
    if (args.l_spec.empty()) throw UsageError("--L is required in fractional mode");
    const auto l = parse_lset(args.l_spec);
    inputs["L"] = l.str();
    report = verify_family(family, l, false);
  } else if (args.mode == "avoiding") {
    report = verify_avoiding(family);
  } else {
    if (args.eps.empty()) throw UsageError("--eps is required in approx mode");
    const auto eps = parse_rational(args.eps);
    inputs["eps"] = to_string(eps);
    report = approx_verify(family, eps);
  }
  auto run_report = make_report("verify", std::move(inputs));
  auto results = verification_json(family, report);
  results["family_size"] = family.size();
  run_report["results"] = std::move(results);
  emit(ctx, std::move(run_report));
  return report.valid ? kExitOk : kExitNegative;
}

// construct ---------------------------------------------------------------

struct ConstructArgs {
  std::string name;
  int n = 0;
  int c = 0;
  int s = 0;
  int k = 0;
  int m = 0;
  std::uint64_t seed = 0;
  std::string eps;
  bool verify = false;
  std::string out_path;
  const CLI::Option* n_opt = nullptr;
  const CLI::Option* s_opt = nullptr;
  const CLI::Option* k_opt = nullptr;
  const CLI::Option* m_opt = nullptr;
  const CLI::Option* seed_opt = nullptr;
};

int cmd_construct(Context& ctx, const ConstructArgs& args) {
  const auto need = [](const CLI::Option* opt, const char* flag) {
    if (opt->count() == 0) throw UsageError(std::string("this construction needs ") + flag);
  };
  Json inputs{{"name", args.name}, {"verify", args.verify}};
  ConstructionOutput built;
  std::optional<Json> seed;
  if (args.name == "example1") {
    need(args.n_opt, "--n");
    inputs["n"] = args.n;
    inputs["c"] = args.c;
    built = example1_family(args.n, args.c, args.verify);
  } else if (args.name == "uniform") {
    need(args.n_opt, "--n");
    need(args.s_opt, "--s");
    inputs["n"] = args.n;
    inputs["s"] = args.s;
    built = uniform_family(args.n, args.s, args.verify);
  } else if (args.name == "star-block") {
    need(args.n_opt, "--n");
    inputs["n"] = args.n;
    built = star_block_family(args.n, args.verify);
  } else if (args.name == "hadamard") {
    need(args.k_opt, "--k");
    inputs["k"] = args.k;
    built = hadamard_family(args.k, args.verify);
  } else if (args.name == "avoiding") {
    need(args.n_opt, "--n");
    inputs["n"] = args.n;
    built = avoiding_family(args.n, args.verify);
  } else {
    need(args.n_opt, "--n");
    need(args.m_opt, "--m");
    const auto s = require_seed(args.seed_opt, args.seed, "random-approx");
    inputs["n"] = args.n;
    inputs["m"] = args.m;
    seed = s;
    built.name = "random-approx";
    built.family = random_approx_family(args.n, args.m, s);
    built.claimed_size = args.m;
    if (args.verify) {
      if (args.eps.empty()) throw UsageError("verifying random-approx needs --eps");
      const auto eps = parse_rational(args.eps);
      inputs["eps"] = to_string(eps);
      built.verified = approx_verify(built.family, eps);
    }
  }

  auto report = make_report("construct", std::move(inputs));
  if (seed) report["seed"] = *seed;
  Json results{{"name", built.name},
               {"claimed_size", to_string(built.claimed_size)},
               {"size", built.family.size()},
               {"intended_L", built.intended_L ? Json(built.intended_L->str()) : Json(nullptr)}};
  results["verification"] = built.verified ? verification_json(built.family, *built.verified) : Json(nullptr);
  if (!args.out_path.empty()) {
    write_family_file(args.out_path, built.family);
    results["family_file"] = args.out_path;
  } else if (ctx.json) {
    results["family"] = family_json(built.family);
  }
  report["results"] = std::move(results);

  if (args.out_path.empty() && !ctx.json) {
    // The family text owns stdout; the summary goes to stderr.
    write_family(ctx.out, built.family);
    emit(ctx, std::move(report), &ctx.err);
  } else {
    emit(ctx, std::move(report));
  }
  return built.verified && !built.verified->valid ? kExitNegative : kExitOk;
}

// bound -------------------------------------------------------------------

struct BoundArgs {
  std::int64_t n = 0;
  std::string l_spec;
  std::string delta;
  std::string g_variant = "statement";
};

int cmd_bound(Context& ctx, const BoundArgs& args) {
  const auto l = parse_lset(args.l_spec);
  std::optional<Rational> delta;
  Json inputs{{"n", args.n}, {"L", l.str()}, {"g_variant", args.g_variant}};
  if (!args.delta.empty()) {
    delta = parse_rational(args.delta);
    inputs["delta"] = to_string(*delta);
  }
  const auto variant = args.g_variant == "proof" ? GVariant::proof : GVariant::statement;
  auto report = make_report("bound", std::move(inputs));
  report["results"] = bound_json(all_bounds(args.n, l, delta, variant));
  emit(ctx, std::move(report));
  return kExitOk;
}

// search ------------------------------------------------------------------

struct SearchArgs {
  int n = 0;
  int n_max = 0;
  std::string l_spec;
  int min_size = 0;
  int max_size = 0;
  std::string parity;
  std::vector<int> sizes;
  double time_limit = 0.0;
  std::uint64_t node_limit = 0;
  std::size_t vertex_budget = kDefaultVertexBudget;
  bool exact = false;
  bool heuristic = false;
  std::uint64_t seed = 0;
  std::uint64_t iterations = 2000;
  std::string out_path;
  const CLI::Option* n_max_opt = nullptr;
  const CLI::Option* min_opt = nullptr;
  const CLI::Option* max_opt = nullptr;
  const CLI::Option* sizes_opt = nullptr;
  const CLI::Option* time_opt = nullptr;
  const CLI::Option* node_opt = nullptr;
  const CLI::Option* seed_opt = nullptr;
};

int cmd_search(Context& ctx, const SearchArgs& args) {
  if (args.exact && args.heuristic) throw UsageError("--exact and --heuristic are exclusive");
  const auto l = parse_lset(args.l_spec);
  UniverseFilter filter;
  Json inputs{{"n", args.n}, {"L", l.str()}};
  if (args.min_opt->count()) {
    filter.min_size = args.min_size;
    inputs["min_size"] = args.min_size;
  }
  if (args.max_opt->count()) {
    filter.max_size = args.max_size;
    inputs["max_size"] = args.max_size;
  }
  if (!args.parity.empty()) {
    filter.parity = args.parity == "even" ? Parity::even : Parity::odd;
    inputs["parity"] = args.parity;
  }
  if (args.sizes_opt->count()) {
    filter.size_set = args.sizes;
    inputs["sizes"] = args.sizes;
  }
  SearchBudget budget;
  budget.threads = ctx.threads;
  if (args.time_opt->count()) {
    budget.time_limit_seconds = args.time_limit;
    inputs["time_limit"] = args.time_limit;
  }
  if (args.node_opt->count()) {
    budget.node_limit = args.node_limit;
    inputs["node_limit"] = args.node_limit;
  }
  inputs["vertex_budget"] = args.vertex_budget;
  inputs["threads"] = ctx.threads;

  if (args.n_max_opt->count()) {
    if (!args.out_path.empty()) throw UsageError("--out applies to a single n, not a table");
    inputs["n_max"] = args.n_max;
    bool needs_heuristic = false;
    for (int n = args.n; n <= args.n_max; ++n) {
      needs_heuristic = needs_heuristic || n > kSearchGroundCap || universe_size(n, filter) > args.vertex_budget;
    }
    std::uint64_t seed = 1;
    if (needs_heuristic) seed = require_seed(args.seed_opt, args.seed, "a table row beyond the vertex budget");
    const auto rows = extremal_table(args.n, args.n_max, l, filter, budget, args.vertex_budget, seed);
    auto report = make_report("search", std::move(inputs));
    if (needs_heuristic) report["seed"] = seed;
    Json table = Json::array();
    for (const auto& row : rows) table.push_back(extremal_row_json(row));
    report["results"] = Json{{"mode", "table"}, {"rows", std::move(table)}};
    emit(ctx, std::move(report));
    return kExitOk;
  }

  SearchResult found;
  Json results;
  std::optional<std::uint64_t> seed;
  if (args.heuristic) {
    seed = require_seed(args.seed_opt, args.seed, "heuristic search");
    HeuristicBudget hb;
    hb.iterations = args.iterations;
    hb.time_limit_seconds = budget.time_limit_seconds;
    inputs["iterations"] = args.iterations;
    found = heuristic_grow(args.n, l, *seed, hb, filter);
    results = Json{{"mode", "heuristic"}};
  } else {
    const auto graph = build_graph(args.n, l, filter, args.vertex_budget);
    found = max_clique(graph, budget);
    results = Json{{"mode", "exact"}, {"vertices", graph.size()}, {"edges", graph.edge_count()}};
  }
  results.update(search_json(found, l));
  if (!args.out_path.empty()) {
    write_family_file(args.out_path, found.best_family);
    results["family_file"] = args.out_path;
  }
  results["family"] = family_json(found.best_family);
  auto report = make_report("search", std::move(inputs));
  if (seed) report["seed"] = *seed;
  report["results"] = std::move(results);
  // Node counts depend on scheduling when several threads share the incumbent.
  report["stats"] = Json{{"nodes_explored", found.nodes_explored}};
  emit(ctx, std::move(report));
  return kExitOk;
}

// algebra -----------------------------------------------------------------

struct AlgebraArgs {
  std::string family_path;
  std::string matrix_path;
  std::string l_spec;
  std::vector<std::int64_t> primes;
  int residue = 0;
  bool monomial = false;
  std::int64_t p = 0;
  std::string values;
  bool exhaustive = false;
  std::uint64_t seed = 0;
  int trials = 100;
  std::string frac;
  std::string delta;
  std::string eps;
  const CLI::Option* residue_opt = nullptr;
  const CLI::Option* p_opt = nullptr;
  const CLI::Option* seed_opt = nullptr;
};

int cmd_independence(Context& ctx, const AlgebraArgs& args) {
  const auto family = read_family_file(args.family_path);
  const auto l = parse_lset(args.l_spec);
  const int t = lset_t(l);
  auto primes = args.primes;
  if (primes.empty()) {
    for (auto p : prime_window(t, family.ground_n())) primes.push_back(static_cast<std::int64_t>(p));
  }
  for (const auto p : primes) {
    if (p <= t || !is_prime(static_cast<std::uint64_t>(p))) {
      throw UsageError("--p " + std::to_string(p) + " must be a prime greater than t = " + std::to_string(t));
    }
  }
  Json inputs{{"family", args.family_path}, {"L", l.str()}, {"primes", primes},
              {"monomial", args.monomial}};
  if (args.residue_opt->count()) inputs["residue"] = args.residue;

  Json classes = Json::array();
  bool all_pass = true;
  for (const auto p : primes) {
    for (int i = 1; i < p; ++i) {
      if (args.residue_opt->count() && i != args.residue) continue;
      const auto cls = residue_class(family, p, i);
      if (cls.empty()) continue;
      const auto ind = independence_check(cls, l, i, p, args.monomial);
      const auto sw = swallow_check(cls, l, i, p);
      all_pass = all_pass && ind.full_rank && ind.diagonal_pattern && sw.passed;
      Json row{{"p", p}, {"residue", i}};
      row.update(independence_json(ind));
      row["multipliers"] = sw.multipliers;
      row["swallow_rank"] = sw.rank;
      row["swallow_expected"] = sw.expected_rank;
      row["swallow_passed"] = sw.passed;
      classes.push_back(std::move(row));
    }
  }
  auto report = make_report("algebra independence", std::move(inputs));
  report["results"] = Json{{"t", t}, {"all_pass", all_pass}, {"classes", std::move(classes)}};
  emit(ctx, std::move(report));
  return all_pass ? kExitOk : kExitNegative;
}

int cmd_rank(Context& ctx, const AlgebraArgs& args) {
  const auto m = read_matrix_file(args.matrix_path);
  Json inputs{{"file", args.matrix_path}};
  Json results{{"rows", m.rows()}, {"cols", m.cols()}, {"rank_rational", rank_rational(m)}};
  if (args.p_opt->count()) {
    inputs["p"] = args.p;
    // Row scaling keeps the rank over Q; mod p it is the rank of the scaled rows.
    results["rank_mod_p"] = rank_mod_p(PrimeFieldMatrix::reduce(clear_denominators(m), args.p));
  }
  auto report = make_report("algebra rank", std::move(inputs));
  report["results"] = std::move(results);
  emit(ctx, std::move(report));
  return kExitOk;
}

int cmd_minrank(Context& ctx, const AlgebraArgs& args) {
  const auto values = parse_rational_list(args.values);
  Json value_text = Json::array();
  for (const auto& v : values) value_text.push_back(to_string(v));
  Json inputs{{"a", std::move(value_text)}, {"exhaustive", args.exhaustive}};
  ChoiceSearchMode mode = ChoiceSearchMode::exhaustive();
  std::optional<std::uint64_t> seed;
  if (!args.exhaustive) {
    seed = require_seed(args.seed_opt, args.seed, "random minrank search");
    inputs["trials"] = args.trials;
    mode = ChoiceSearchMode::random(*seed, args.trials);
  }
  auto report = make_report("algebra minrank", std::move(inputs));
  if (seed) report["seed"] = *seed;
  report["results"] = choice_json(min_rank_choice(values, mode));
  emit(ctx, std::move(report));
  return kExitOk;
}

int cmd_gram(Context& ctx, const AlgebraArgs& args) {
  const auto family = read_family_file(args.family_path);
  Json inputs{{"family", args.family_path}};
  Json results;
  int code = kExitOk;
  if (!args.frac.empty() || !args.delta.empty()) {
    if (args.frac.empty() || args.delta.empty()) throw UsageError("--frac and --delta go together");
    const auto frac = parse_fraction(args.frac);
    const auto delta = parse_rational(args.delta);
    inputs["frac"] = frac.str();
    inputs["delta"] = to_string(delta);
    const auto scaled = gram_scaled(family, frac, delta);
    const auto bound = theorem4_bound(family.ground_n(), delta);
    const bool below = Rational(family.size()) < bound;
    results = Json{{"size", family.size()},
                   {"unit_diagonal", scaled.unit_diagonal},
                   {"off_diagonal_within", scaled.off_diagonal_within},
                   {"max_off_diagonal_squared", to_string(scaled.max_off_diagonal_squared)},
                   {"limit_squared", to_string(scaled.limit_squared)},
                   {"rank", scaled.rank},
                   {"size_bound", to_string(bound)},
                   {"size_below_bound", below}};
    if (!(scaled.unit_diagonal && scaled.off_diagonal_within && below)) code = kExitNegative;
  } else {
    const auto gram = gram_pm1(family);
    results = Json{{"size", family.size()}, {"rank", rank_rational(gram)}, {"gram", matrix_json(gram)}};
  }
  auto report = make_report("algebra gram", std::move(inputs));
  report["results"] = std::move(results);
  emit(ctx, std::move(report));
  return code;
}

int cmd_bridge(Context& ctx, const AlgebraArgs& args) {
  const auto family = read_family_file(args.family_path);
  const auto bridge = family_to_choice_matrix(family);
  Json values = Json::array();
  for (const auto& v : bridge.instance.values) values.push_back(to_string(v));
  const auto limit = static_cast<Eigen::Index>(family.ground_n()) + 1;
  auto report = make_report("algebra bridge", Json{{"family", args.family_path}});
  report["results"] = Json{{"size", family.size()},
                           {"consistent", bridge.consistent},
                           {"distinct_values", bridge.instance.distinct_values()},
                           {"rank", bridge.rank},
                           {"rank_limit", limit},
                           {"values", std::move(values)},
                           {"matrix", matrix_json(bridge.instance.matrix)}};
  emit(ctx, std::move(report));
  return bridge.consistent && bridge.rank <= limit ? kExitOk : kExitNegative;
}

int cmd_trace_rank(Context& ctx, const AlgebraArgs& args) {
  const auto m = read_matrix_file(args.matrix_path);
  const auto eps = parse_rational(args.eps);
  const auto alon = alon_rank_check(m, eps);
  auto report = make_report("algebra trace-rank", Json{{"file", args.matrix_path}, {"eps", to_string(eps)}});
  report["results"] = alon_json(alon);
  emit(ctx, std::move(report));
  return alon.holds() ? kExitOk : kExitNegative;
}

// sample ------------------------------------------------------------------

struct SampleArgs {
  int n = 0;
  int m = 0;
  std::string eps;
  int trials = 0;
  std::uint64_t seed = 0;
  const CLI::Option* seed_opt = nullptr;
};

int cmd_sample(Context& ctx, const SampleArgs& args) {
  const auto seed = require_seed(args.seed_opt, args.seed, "sample");
  const auto eps = parse_rational(args.eps);
  const auto summary = sample_approx(args.n, args.m, eps, args.trials, seed);
  auto report = make_report("sample", Json{{"n", args.n}, {"m", args.m}, {"eps", to_string(eps)},
                                           {"trials", args.trials}});
  report["seed"] = seed;
  report["results"] = Json{{"successes", summary.successes},
                           {"frequency", summary.frequency},
                           {"size_claim", summary.size_claim}};
  emit(ctx, std::move(report));
  return kExitOk;
}

int default_threads() {
  if (const char* env = std::getenv("FRACINT_THREADS")) {
    try {
      const int value = std::stoi(env);
      if (value >= 1) return value;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractional L-intersecting families: verification, constructions, bounds, search, algebra",
               "fracint"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx{out, err};
  ctx.threads = default_threads();
  app.add_flag("--json", ctx.json, "Emit the run report as JSON");
  app.add_option("--threads", ctx.threads, "Worker threads for exact search (default $FRACINT_THREADS or 1)")
      ->check(CLI::PositiveNumber);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check a family file");
  verify->add_option("--family", verify_args.family_path, "Family file")->required();
  verify->add_option("--L", verify_args.l_spec, "Fractions, e.g. 1/2,1/3");
  verify->add_option("--mode", verify_args.mode, "fractional | avoiding | approx")
      ->check(CLI::IsMember({"fractional", "avoiding", "approx"}));
  verify->add_option("--eps", verify_args.eps, "Tolerance for approx mode");

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "Generate a named family");
  construct->add_option("name", construct_args.name, "Construction name")
      ->required()
      ->check(CLI::IsMember({"example1", "uniform", "star-block", "hadamard", "avoiding", "random-approx"}));
  construct_args.n_opt = construct->add_option("--n", construct_args.n, "Ground set size");
  construct->add_option("--c", construct_args.c, "Size deficit for example1");
  construct_args.s_opt = construct->add_option("--s", construct_args.s, "Member size for uniform");
  construct_args.k_opt = construct->add_option("--k", construct_args.k, "Order exponent for hadamard");
  construct_args.m_opt = construct->add_option("--m", construct_args.m, "Member count for random-approx");
  construct_args.seed_opt = construct->add_option("--seed", construct_args.seed, "Seed for random-approx");
  construct->add_option("--eps", construct_args.eps, "Tolerance when verifying random-approx");
  construct->add_flag("--verify", construct_args.verify, "Run the matching verifier");
  construct->add_option("--out", construct_args.out_path, "Write the family to this file");

  BoundArgs bound_args;
  auto* bound = app.add_subcommand("bound", "Evaluate every applicable upper bound");
  bound->add_option("--n", bound_args.n, "Ground set size")->required()->check(CLI::PositiveNumber);
  bound->add_option("--L", bound_args.l_spec, "Fractions, e.g. 1/2")->required();
  bound->add_option("--delta", bound_args.delta, "Window parameter (> 1)");
  bound->add_option("--g-variant", bound_args.g_variant, "statement | proof")
      ->check(CLI::IsMember({"statement", "proof"}));

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Largest family by max clique or local search");
  search->add_option("--n", search_args.n, "Ground set size (first row with --n-max)")
      ->required()
      ->check(CLI::PositiveNumber);
  search_args.n_max_opt = search->add_option("--n-max", search_args.n_max, "Tabulate n .. n-max");
  search->add_option("--L", search_args.l_spec, "Fractions, e.g. 1/2")->required();
  search_args.min_opt = search->add_option("--min-size", search_args.min_size, "Smallest member size");
  search_args.max_opt = search->add_option("--max-size", search_args.max_size, "Largest member size");
  search->add_option("--parity", search_args.parity, "even | odd")->check(CLI::IsMember({"even", "odd"}));
  search_args.sizes_opt = search->add_option("--sizes", search_args.sizes, "Allowed member sizes")
                              ->delimiter(',');
  search_args.time_opt = search->add_option("--time-limit", search_args.time_limit, "Seconds");
  search_args.node_opt = search->add_option("--node-limit", search_args.node_limit, "Branch nodes");
  search->add_option("--vertex-budget", search_args.vertex_budget, "Refuse larger universes");
  search->add_flag("--exact", search_args.exact, "Branch and bound (the default)");
  search->add_flag("--heuristic", search_args.heuristic, "Seeded local search");
  search_args.seed_opt = search->add_option("--seed", search_args.seed, "Seed for --heuristic");
  search->add_option("--iterations", search_args.iterations, "Local search rounds");
  search->add_option("--out", search_args.out_path, "Write the best family to this file");

  AlgebraArgs algebra_args;
  auto* algebra = app.add_subcommand("algebra", "Rank computations");
  algebra->require_subcommand(1);
  auto* independence = algebra->add_subcommand("independence", "Residue-class polynomial independence");
  independence->add_option("--family", algebra_args.family_path, "Family file")->required();
  independence->add_option("--L", algebra_args.l_spec, "Fractions")->required();
  independence->add_option("--p", algebra_args.primes, "Primes (default: the prime window)")->delimiter(',');
  algebra_args.residue_opt = independence->add_option("--residue", algebra_args.residue, "Single residue");
  independence->add_flag("--monomial", algebra_args.monomial, "Also rank the monomial expansion");
  auto* rank = algebra->add_subcommand("rank", "Rank of a matrix file");
  rank->add_option("--file", algebra_args.matrix_path, "Matrix file")->required();
  algebra_args.p_opt = rank->add_option("--p", algebra_args.p, "Also rank mod this prime");
  auto* minrank = algebra->add_subcommand("minrank", "Minimum rank of choice matrices");
  minrank->add_option("--a", algebra_args.values, "Ascending positive values, e.g. 1,2,3,4")->required();
  minrank->add_flag("--exhaustive", algebra_args.exhaustive, "Enumerate every assignment");
  algebra_args.seed_opt = minrank->add_option("--seed", algebra_args.seed, "Seed for random search");
  minrank->add_option("--trials", algebra_args.trials, "Random starts");
  auto* gram = algebra->add_subcommand("gram", "Gram matrix of the +-1 incidence vectors");
  gram->add_option("--family", algebra_args.family_path, "Family file")->required();
  gram->add_option("--frac", algebra_args.frac, "Window fraction a/b, with --delta");
  gram->add_option("--delta", algebra_args.delta, "Window parameter, with --frac");
  auto* bridge = algebra->add_subcommand("bridge", "Choice matrix of a bisection-closed family");
  bridge->add_option("--family", algebra_args.family_path, "Family file")->required();
  auto* trace_rank = algebra->add_subcommand("trace-rank", "Rank versus trace ratio");
  trace_rank->add_option("--file", algebra_args.matrix_path, "Matrix file")->required();
  trace_rank->add_option("--eps", algebra_args.eps, "Off-diagonal bound")->required();

  SampleArgs sample_args;
  auto* sample = app.add_subcommand("sample", "Monte-Carlo check of random approximate families");
  sample->add_option("--n", sample_args.n, "Ground set size")->required();
  sample->add_option("--m", sample_args.m, "Members per family")->required();
  sample->add_option("--eps", sample_args.eps, "Tolerance")->required();
  sample->add_option("--trials", sample_args.trials, "Families drawn")->required();
  sample_args.seed_opt = sample->add_option("--seed", sample_args.seed, "Seed");

  std::vector<std::string> argv_storage{"fracint"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(ctx, verify_args);
    if (construct->parsed()) return cmd_construct(ctx, construct_args);
    if (bound->parsed()) return cmd_bound(ctx, bound_args);
    if (search->parsed()) return cmd_search(ctx, search_args);
    if (independence->parsed()) return cmd_independence(ctx, algebra_args);
    if (rank->parsed()) return cmd_rank(ctx, algebra_args);
    if (minrank->parsed()) return cmd_minrank(ctx, algebra_args);
    if (gram->parsed()) return cmd_gram(ctx, algebra_args);
    if (bridge->parsed()) return cmd_bridge(ctx, algebra_args);
    if (trace_rank->parsed()) return cmd_trace_rank(ctx, algebra_args);
    if (sample->parsed()) return cmd_sample(ctx, sample_args);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fracint::cli
