#include "oracles.hpp"

#include "fracint/family.hpp"

#include <doctest.h>

#include <numeric>
#include <random>
#include <sstream>

using namespace fracint;

namespace {

LSet half() { return LSet({Fraction(1, 2)}); }

Family fam(int n, std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<Subset> members;
  for (auto s : sets) members.push_back(Subset::from_elements(n, s));
  return Family(n, std::move(members));
}

}  // namespace

TEST_SUITE("family") {

TEST_CASE("fractions reduce and reject values outside [0,1)") {
  CHECK(make_fraction(1, 2).str() == "1/2");
  CHECK(make_fraction(2, 4) == Fraction(1, 2));
  CHECK(make_fraction(0, 7).denominator() == 1);
  CHECK_THROWS_AS(make_fraction(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_fraction(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_fraction(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_fraction(-1, 3), std::invalid_argument);
  CHECK(Fraction(1, 3) < Fraction(1, 2));
  CHECK(parse_fraction(" 3/9 ") == Fraction(1, 3));
  CHECK(parse_fraction("0") == Fraction(0, 1));
  CHECK_THROWS_AS(parse_fraction("1/x"), std::invalid_argument);
}

TEST_CASE("L sets sort by value and reject duplicates after reduction") {
  const auto l = parse_lset("1/2,1/3,0/1");
  CHECK(l.str() == "0/1,1/3,1/2");
  CHECK(l.max() == Fraction(1, 2));
  CHECK(l.max_denominator() == 3);
  CHECK(l.contains_zero());
  CHECK_THROWS_AS(parse_lset("1/2,2/4"), std::invalid_argument);
  CHECK_THROWS_AS(LSet({}), std::invalid_argument);
}

TEST_CASE("subsets keep 1-based labels across word boundaries") {
  auto s = Subset::from_elements(130, {1, 64, 65, 130});
  CHECK(s.cardinality() == 4);
  CHECK(s.words().size() == 3);
  CHECK(s.contains(65));
  CHECK_FALSE(s.contains(66));
  s.erase(64);
  s.insert(66);
  CHECK(s.elements() == std::vector<int>{1, 65, 66, 130});
  CHECK(s.str() == "1 65 66 130");
  const auto t = Subset::from_elements(130, {65, 66, 100});
  CHECK(intersection_size(s, t) == 2);
  CHECK_THROWS_AS(Subset::from_elements(4, {5}), std::invalid_argument);
  CHECK_THROWS_AS(Subset::from_elements(4, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Subset::from_elements(4, {0}), std::invalid_argument);
}

TEST_CASE("families are held in canonical order and reject duplicates") {
  const auto f = fam(4, {{1, 2, 3}, {4}, {1, 2}, {3}});
  CHECK(f[0].str() == "3");
  CHECK(f[1].str() == "4");
  CHECK(f[2].str() == "1 2");
  CHECK(f[3].str() == "1 2 3");
  CHECK_THROWS_AS(fam(3, {{1}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(Family(3, {Subset::from_elements(4, {1})}), std::invalid_argument);
}

TEST_CASE("pair condition on the module examples") {
  CHECK(is_fractional_pair(Subset::from_elements(3, {1, 2}), Subset::from_elements(3, {1, 3}), half()));
  CHECK(is_fractional_pair(Subset::from_elements(2, {1}), Subset::from_elements(2, {2}), parse_lset("0/1")));
  CHECK_FALSE(is_fractional_pair(Subset::from_elements(4, {1, 2}), Subset::from_elements(4, {3, 4}), half()));
  const auto a = Subset::from_elements(3, {1, 2});
  CHECK_THROWS_AS(is_fractional_pair(a, a, half()), std::invalid_argument);
  CHECK_THROWS_AS(is_fractional_pair(a, Subset::from_elements(4, {1}), half()), std::invalid_argument);
  // The smallest certifying fraction is reported.
  const auto w = is_fractional_pair(Subset::from_elements(6, {1, 2, 3}), Subset::from_elements(6, {1, 4, 5, 6}),
                                    parse_lset("1/4,1/3"));
  REQUIRE(w);
  CHECK(*w == Fraction(1, 4));
}

TEST_CASE("verify_family on the module examples") {
  const auto star8 = fam(8, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 8},
                             {1, 2, 3, 4}, {1, 2, 5, 6}, {1, 2, 7, 8}});
  const auto r = verify_family(star8, half());
  CHECK(r.valid);
  CHECK(star8.size() == 10);
  CHECK(r.pair_witnesses.size() == 45);
  CHECK(verify_family(fam(5, {{2, 3}}), half()).valid);
  const auto bad = verify_family(fam(4, {{1, 2}, {3, 4}}), half());
  CHECK_FALSE(bad.valid);
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0] == IndexPair{0, 1});
}

TEST_CASE("avoiding check on the module examples") {
  CHECK(is_avoiding(fam(4, {{1, 2}, {3, 4}})));
  CHECK_FALSE(is_avoiding(fam(3, {{1, 2}, {1, 3}})));
  CHECK_THROWS_WITH_AS(is_avoiding(fam(3, {{1, 2}, {1, 2, 3}})), doctest::Contains("{1 2 3}"),
                       std::invalid_argument);
}

TEST_CASE("avoiding check agrees with an unpruned pairwise scan") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + trial % 7;
    auto pool = oracle::all_subsets(n, [](int k) { return k % 2 == 0; });
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(std::min<std::size_t>(pool.size(), 3 + trial % 12));
    const Family f(n, pool);
    std::size_t expected = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = i + 1; j < f.size(); ++j) expected += oracle::bisects(f[i], f[j]) ? 1 : 0;
    }
    CHECK(verify_avoiding(f).violations.size() == expected);
  }
}

TEST_CASE("uniformity and the induced classical L") {
  CHECK(uniformity(Family(4, oracle::all_subsets(4, [](int k) { return k == 2; }))) == 2);
  CHECK_FALSE(uniformity(fam(2, {{1}, {1, 2}})).has_value());
  CHECK_THROWS_AS(uniformity(Family(3, {})), std::invalid_argument);
  CHECK(induced_classical_L(4, half()) == std::vector<int>{2});
  CHECK(induced_classical_L(5, parse_lset("1/2,1/3")) == std::vector<int>{1, 2});
  CHECK(induced_classical_L(3, parse_lset("0/1")) == std::vector<int>{0});
}

TEST_CASE("family text format: parse, write, round trip, line-numbered errors") {
  const auto f = parse_family("n=5\n# comment\n1 2\n\n3 4 5\n2\n");
  CHECK(f.ground_n() == 5);
  CHECK(f.size() == 3);
  CHECK(format_family(f) == "n=5\n2\n1 2\n3 4 5\n");
  CHECK(parse_family(format_family(f)) == f);

  const auto line_of = [](std::string_view text) {
    try {
      parse_family(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("1 2\n") == 1);
  CHECK(line_of("n=3\n1 2\n2 1\n") == 3);
  CHECK(line_of("n=3\n1 4\n") == 2);
  CHECK(line_of("n=3\n1 x\n") == 2);
  CHECK(line_of("n=3\n1 2\n# c\n1 2\n") == 4);
  CHECK(line_of("") == 1);
}

TEST_CASE("property: verifier equals the naive pairwise oracle") {
  std::mt19937_64 rng(2024);
  const std::vector<LSet> ls{half(), parse_lset("1/3"), parse_lset("0/1,1/2"), parse_lset("1/3,2/3"),
                             parse_lset("1/4,1/2,3/4")};
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + trial % 7;
    const auto f = oracle::random_family(n, 2 + trial % 9, rng);
    const auto& l = ls[static_cast<std::size_t>(trial) % ls.size()];
    const auto r = verify_family(f, l);
    CHECK(r.violations.size() == oracle::violations(f, l));
    CHECK(r.valid == r.violations.empty());
    CHECK(r.pair_witnesses.size() + r.violations.size() == f.size() * (f.size() - 1) / 2);
  }
}

TEST_CASE("property: relabelling the ground set preserves validity") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + trial % 6;
    // Half the trials use a known-valid family so that both outcomes are exercised.
    Family f = trial % 2 == 0 ? oracle::random_family(n, 5, rng)
                              : fam(4, {{1, 2}, {1, 3}, {1, 4}, {1, 2, 3, 4}});
    std::vector<int> perm(static_cast<std::size_t>(f.ground_n()));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Subset> moved;
    for (const auto& m : f) moved.push_back(m.relabelled(perm));
    const Family g(f.ground_n(), moved);
    CHECK(verify_family(f, half()).valid == verify_family(g, half()).valid);
    CHECK(verify_family(f, half()).violations.size() == verify_family(g, half()).violations.size());
  }
}

TEST_CASE("property: valid uniform families are classically intersecting in the induced L") {
  std::mt19937_64 rng(5);
  const std::vector<LSet> ls{half(), parse_lset("1/3,2/3"), parse_lset("0/1,1/2")};
  int checked = 0;
  for (int t = 2; t <= 4; ++t) {
    auto pool = oracle::all_subsets(7, [t](int k) { return k == t; });
    for (int trial = 0; trial < 150; ++trial) {
      std::shuffle(pool.begin(), pool.end(), rng);
      const Family f(7, {pool.begin(), pool.begin() + 3});
      for (const auto& l : ls) {
        if (!verify_family(f, l).valid) continue;
        ++checked;
        const auto classical = induced_classical_L(t, l);
        for (std::size_t i = 0; i < f.size(); ++i) {
          for (std::size_t j = i + 1; j < f.size(); ++j) {
            const int k = oracle::meet(f[i], f[j]);
            CHECK(std::find(classical.begin(), classical.end(), k) != classical.end());
          }
        }
      }
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("property: singleton L leaves at most one member size off the denominator") {
  std::mt19937_64 rng(3);
  int checked = 0;
  for (const auto& l : {half(), parse_lset("1/3"), parse_lset("2/3")}) {
    const auto b = l.max().denominator();
    for (int trial = 0; trial < 3000; ++trial) {
      const auto f = oracle::random_family(6, 3 + trial % 3, rng);
      if (!verify_family(f, l, false).valid) continue;
      ++checked;
      int off = 0;
      for (const auto& m : f) off += m.cardinality() % b != 0 ? 1 : 0;
      CHECK(off <= 1);
    }
  }
  CHECK(checked > 10);
}

TEST_CASE("property: the pair condition is symmetric") {
  std::mt19937_64 rng(13);
  const auto l = parse_lset("1/3,1/2,3/5");
  for (int trial = 0; trial < 500; ++trial) {
    const auto f = oracle::random_family(9, 2, rng);
    CHECK(is_fractional_pair(f[0], f[1], l) == is_fractional_pair(f[1], f[0], l));
  }
}

}  // TEST_SUITE
