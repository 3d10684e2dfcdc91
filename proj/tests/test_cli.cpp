#include "cli.hpp"
#include "report.hpp"

#include "fracint/family.hpp"

#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using fracint::cli::Json;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = fracint::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("fracint-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name, const std::string& text = {}) const {
    const auto p = (path_ / name).string();
    if (!text.empty()) std::ofstream(p) << text;
    return p;
  }

 private:
  std::filesystem::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json without_timing(Json report) {
  report.erase("wall_time");
  return report;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("construct emits the family text format") {
  const auto r = run({"construct", "star-block", "--n", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n=8\n1 2\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 11);
  CHECK(fracint::parse_family(r.out).size() == 10);
  const auto u = run({"--json", "construct", "uniform", "--n", "4", "--s", "2"});
  CHECK(u.code == 0);
  CHECK(u.json()["results"]["size"] == 6);
  CHECK(u.json()["results"]["family"]["sets"].size() == 6);
}

TEST_CASE("construct with --verify embeds the computed outcome") {
  const auto r = run({"--json", "construct", "hadamard", "--k", "2", "--verify"});
  CHECK(r.code == 1);
  const auto v = r.json()["results"]["verification"];
  CHECK(v["valid"] == false);
  CHECK(v["violation_count"] == 1);
  CHECK(v["violations"][0]["first"] == Json::array({2}));
  CHECK(v["violations"][0]["second"] == Json::array({3, 4}));
  const auto ok = run({"--json", "construct", "star-block", "--n", "6", "--verify"});
  CHECK(ok.code == 0);
  CHECK(ok.json()["results"]["verification"]["valid"] == true);
  const auto avoid = run({"--json", "construct", "avoiding", "--n", "12", "--verify"});
  CHECK(avoid.code == 0);
  CHECK(avoid.json()["results"]["size"] == 67);
}

TEST_CASE("verify exit codes") {
  TempDir dir;
  const auto star = dir.file("star.txt");
  REQUIRE(run({"construct", "star-block", "--n", "8", "--out", star}).code == 0);
  CHECK(run({"verify", "--family", star, "--L", "1/2"}).code == 0);

  const auto disjoint = dir.file("disjoint.txt", "n=4\n1 2\n3 4\n");
  const auto bad = run({"--json", "verify", "--family", disjoint, "--L", "1/2"});
  CHECK(bad.code == 1);
  CHECK(bad.json()["results"]["violations"][0]["first"] == Json::array({1, 2}));

  const auto malformed = dir.file("malformed.txt", "n=4\n1 2\n2 1\n");
  const auto m = run({"verify", "--family", malformed, "--L", "1/2"});
  CHECK(m.code == 2);
  CHECK(m.err.find("line 3") != std::string::npos);

  CHECK(run({"verify", "--family", dir.file("missing.txt"), "--L", "1/2"}).code == 2);
  CHECK(run({"verify", "--family", star, "--L", "3/2"}).code == 2);
  CHECK(run({"verify", "--family", star, "--mode", "avoiding"}).code == 1);
  const auto odd = dir.file("odd.txt", "n=3\n1 2 3\n");
  CHECK(run({"verify", "--family", odd, "--mode", "avoiding"}).code == 2);
  const auto even = dir.file("even.txt", "n=4\n1 2\n3 4\n");
  CHECK(run({"verify", "--family", even, "--mode", "avoiding"}).code == 0);
  CHECK(run({"verify", "--family", star, "--mode", "approx", "--eps", "1/10"}).code == 0);
}

TEST_CASE("emitted family files round-trip through the parser") {
  TempDir dir;
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"construct", "example1", "--n", "4"},
           {"construct", "hadamard", "--k", "3"},
           {"construct", "random-approx", "--n", "70", "--m", "6", "--seed", "3"},
           {"search", "--n", "4", "--L", "1/2"}}) {
    const auto path = dir.file("out.txt");
    auto with_out = args;
    with_out.insert(with_out.end(), {"--out", path});
    REQUIRE(run(with_out).code == 0);
    const auto text = slurp(path);
    CHECK(fracint::format_family(fracint::parse_family(text)) == text);
  }
}

TEST_CASE("bound prints the exact and singleton values") {
  const auto r = run({"--json", "bound", "--n", "16", "--L", "1/2"});
  CHECK(r.code == 0);
  const auto results = r.json()["results"];
  CHECK(results["exact_prime_bound"] == "192");
  bool saw = false;
  for (const auto& e : results["entries"]) {
    if (e["kind"] == "singleton_prime_b") {
      saw = true;
      CHECK(e["value"] == "69");
    }
  }
  CHECK(saw);
  const auto table = run({"bound", "--n", "16", "--L", "1/2"});
  CHECK(table.out.find("singleton_prime_b") != std::string::npos);
  CHECK(run({"bound", "--n", "16", "--L", "1/4"}).code == 0);
}

TEST_CASE("search reports size and optimality") {
  const auto r = run({"--json", "search", "--n", "4", "--L", "1/2", "--exact"});
  CHECK(r.code == 0);
  CHECK(r.json()["results"]["size"] == 4);
  CHECK(r.json()["results"]["optimal"] == true);
  CHECK(r.json()["results"]["verified"] == true);
  const auto capped = run({"--json", "search", "--n", "8", "--L", "1/2", "--min-size", "5"});
  CHECK(capped.json()["results"]["size"].get<int>() <= 8);
  CHECK(run({"search", "--n", "13", "--L", "1/2"}).code == 2);
  CHECK(run({"search", "--n", "8", "--L", "1/2", "--heuristic"}).code == 2);
  const auto h = run({"--json", "search", "--n", "8", "--L", "1/2", "--heuristic", "--seed", "4"});
  CHECK(h.code == 0);
  CHECK(h.json()["seed"] == 4);
  CHECK(h.json()["results"]["optimal"] == false);
  const auto table = run({"--json", "search", "--n", "2", "--n-max", "5", "--L", "1/2"});
  CHECK(table.json()["results"]["rows"].size() == 4);
}

TEST_CASE("algebra subcommands") {
  TempDir dir;
  const auto star = dir.file("star.txt");
  REQUIRE(run({"construct", "star-block", "--n", "8", "--out", star}).code == 0);
  const auto ind = run({"--json", "algebra", "independence", "--family", star, "--L", "1/2"});
  CHECK(ind.code == 0);
  CHECK(ind.json()["results"]["all_pass"] == true);
  const auto single = run({"--json", "algebra", "independence", "--family", star, "--L", "1/2", "--p", "3",
                           "--residue", "2", "--monomial"});
  REQUIRE(single.json()["results"]["classes"].size() == 1);
  CHECK(single.json()["results"]["classes"][0]["monomial_rank"] == 7);
  CHECK(run({"algebra", "independence", "--family", star, "--L", "1/2", "--p", "2"}).code == 2);

  const auto matrix = dir.file("m.txt", "2 2\n1 2\n2 1\n");
  const auto rank = run({"--json", "algebra", "rank", "--file", matrix, "--p", "3"});
  CHECK(rank.json()["results"]["rank_rational"] == 2);
  CHECK(rank.json()["results"]["rank_mod_p"] == 1);
  CHECK(run({"algebra", "rank", "--file", dir.file("bad.txt", "2 2\n1 2\n")}).code == 2);

  const auto minrank = run({"--json", "algebra", "minrank", "--a", "1,2,3,4", "--exhaustive"});
  CHECK(minrank.json()["results"]["min_rank"] == 3);
  CHECK(run({"algebra", "minrank", "--a", "1,2,3,4"}).code == 2);
  CHECK(run({"algebra", "minrank", "--a", "1,2,3,4", "--seed", "2", "--trials", "5"}).code == 0);

  const auto bridge = run({"--json", "algebra", "bridge", "--family", star});
  CHECK(bridge.code == 0);
  CHECK(bridge.json()["results"]["consistent"] == true);
  CHECK(bridge.json()["results"]["rank"].get<int>() <= 9);

  const auto gram = run({"--json", "algebra", "gram", "--family", star});
  CHECK(gram.json()["results"]["gram"][0][0] == "8");
  const auto window = dir.file("w.txt", "n=4\n1 2\n1 3\n");
  const auto scaled = run({"--json", "algebra", "gram", "--family", window, "--frac", "1/2", "--delta", "2"});
  CHECK(scaled.code == 0);
  CHECK(scaled.json()["results"]["unit_diagonal"] == true);

  const auto alon = run({"--json", "algebra", "trace-rank", "--file", dir.file("a.txt", "2 2\n1 1/4\n1/4 1\n"),
                         "--eps", "1/4"});
  CHECK(alon.code == 0);
  CHECK(alon.json()["results"]["holds"] == true);
}

TEST_CASE("sample requires a seed and is reproducible") {
  CHECK(run({"sample", "--n", "50", "--eps", "2/5", "--m", "4", "--trials", "10"}).code == 2);
  const auto a = run({"--json", "sample", "--n", "50", "--eps", "2/5", "--m", "4", "--trials", "10", "--seed", "7"});
  const auto b = run({"--json", "sample", "--n", "50", "--eps", "2/5", "--m", "4", "--trials", "10", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(without_timing(a.json()) == without_timing(b.json()));
  CHECK(without_timing(a.json()).dump() == without_timing(b.json()).dump());
}

TEST_CASE("same inputs give byte-identical payloads") {
  const std::vector<std::vector<std::string>> commands{
      {"--json", "construct", "hadamard", "--k", "3", "--verify"},
      {"--json", "construct", "random-approx", "--n", "30", "--m", "5", "--seed", "11", "--verify", "--eps", "1/4"},
      {"--json", "search", "--n", "5", "--L", "1/2"},
      {"--json", "search", "--n", "9", "--L", "1/2", "--heuristic", "--seed", "2", "--iterations", "300"},
      {"--json", "bound", "--n", "40", "--L", "1/3,1/2", "--delta", "3"},
      {"--json", "algebra", "minrank", "--a", "1,2,3,4,5", "--seed", "5", "--trials", "10"}};
  for (const auto& args : commands) {
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == b.code);
    CHECK(without_timing(a.json()).dump() == without_timing(b.json()).dump());
  }
}

TEST_CASE("thread count: flag, environment and invariance") {
  ::setenv("FRACINT_THREADS", "4", 1);
  const auto env = run({"--json", "search", "--n", "5", "--L", "1/2"});
  CHECK(env.json()["inputs"]["threads"] == 4);
  const auto flag = run({"--json", "--threads", "2", "search", "--n", "5", "--L", "1/2"});
  CHECK(flag.json()["inputs"]["threads"] == 2);
  ::unsetenv("FRACINT_THREADS");
  const auto one = run({"--json", "--threads", "1", "search", "--n", "5", "--L", "1/2"});
  const auto eight = run({"--json", "--threads", "8", "search", "--n", "5", "--L", "1/2"});
  CHECK(one.json()["results"] == eight.json()["results"]);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"construct", "nonsense"}).code == 2);
  CHECK(run({"construct", "star-block"}).code == 2);
  CHECK(run({"construct", "star-block", "--n", "7"}).code == 2);
  CHECK(run({"construct", "random-approx", "--n", "10", "--m", "3"}).code == 2);
  CHECK(run({"--threads", "0", "bound", "--n", "4", "--L", "1/2"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

}  // TEST_SUITE
