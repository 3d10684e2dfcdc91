#include "oracles.hpp"

#include "fracint/bounds.hpp"
#include "fracint/constructions.hpp"

#include <doctest.h>

#include <cmath>

using namespace fracint;

TEST_SUITE("constructions") {

TEST_CASE("example1 families and their L") {
  const auto e3 = example1_family(3);
  CHECK(e3.family.size() == 7);
  REQUIRE(e3.intended_L);
  CHECK(e3.intended_L->str() == "0/1,1/3,1/2,2/3");
  CHECK(e3.claimed_size == 7);
  const auto e1 = example1_family(1);
  CHECK(e1.family.size() == 1);
  CHECK(e1.intended_L->str() == "0/1");
  const auto e41 = example1_family(4, 1);
  CHECK(e41.family.size() == 14);
  CHECK(e41.claimed_size == 14);
  CHECK_THROWS_AS(example1_family(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(example1_family(kExhaustiveGroundCap + 1), std::invalid_argument);
}

TEST_CASE("example1 families verify against their L by oracle") {
  for (int n = 1; n <= 6; ++n) {
    for (int c = 0; c < n && c <= 2; ++c) {
      const auto out = example1_family(n, c);
      REQUIRE(out.verified);
      CHECK(out.verified->valid);
      CHECK(oracle::violations(out.family, *out.intended_L) == 0);
      CHECK(BigInt(out.family.size()) == out.claimed_size);
    }
  }
}

TEST_CASE("uniform families") {
  const auto u42 = uniform_family(4, 2);
  CHECK(u42.family.size() == 6);
  CHECK(u42.intended_L->str() == "0/1,1/2");
  CHECK(uniform_family(3, 3).family.size() == 1);
  const auto u52 = uniform_family(5, 2);
  CHECK(u52.family.size() == 10);
  CHECK(u52.verified->valid);
  CHECK(oracle::violations(u52.family, *u52.intended_L) == 0);
  CHECK(uniformity(uniform_family(5, 3).family) == 3);
  CHECK_THROWS_AS(uniform_family(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(uniform_family(3, 0), std::invalid_argument);
}

TEST_CASE("star-block families") {
  const auto s4 = star_block_family(4);
  CHECK(format_family(s4.family) == "n=4\n1 2\n1 3\n1 4\n1 2 3 4\n");
  CHECK(star_block_family(6).family.size() == 7);
  for (int n = 4; n <= 40; n += 2) {
    const auto out = star_block_family(n);
    CHECK(out.family.size() == static_cast<std::size_t>(3 * n / 2 - 2));
    CHECK(out.verified->valid);
    CHECK(oracle::violations(out.family, *out.intended_L) == 0);
  }
  CHECK_THROWS_AS(star_block_family(7), std::invalid_argument);
  CHECK_THROWS_AS(star_block_family(2), std::invalid_argument);
}

TEST_CASE("Sylvester matrices are Hadamard") {
  for (int k = 0; k <= 5; ++k) {
    const auto h = sylvester_hadamard(k);
    const auto order = 1 << k;
    CHECK(h.rows() == order);
    const MatrixX<int> gram = h * h.transpose();
    CHECK(gram == order * MatrixX<int>::Identity(order, order));
  }
}

TEST_CASE("Hadamard families: size formula and the verifier against the oracle") {
  const auto k2 = hadamard_family(2);
  CHECK(format_family(k2.family) == "n=4\n2\n2 3\n2 4\n3 4\n");
  // Outcomes pinned from the pairwise oracle: the family is not bisection-closed.
  const std::size_t pinned_violations[] = {1, 3, 7};
  for (int k = 2; k <= 4; ++k) {
    const auto out = hadamard_family(k);
    const int n = 1 << k;
    CHECK(out.family.size() == static_cast<std::size_t>(3 * n / 2 - 2));
    REQUIRE(out.verified);
    const auto expected = oracle::violations(out.family, *out.intended_L);
    CHECK(out.verified->violations.size() == expected);
    CHECK(out.verified->valid == (expected == 0));
    CHECK(expected == pinned_violations[k - 2]);
  }
  const auto pair = verify_family(Family(4, {Subset::from_elements(4, {3, 4}), Subset::from_elements(4, {2})}),
                                  LSet({Fraction(1, 2)}));
  CHECK_FALSE(pair.valid);
  CHECK_THROWS_AS(hadamard_family(1), std::invalid_argument);
}

TEST_CASE("avoiding families: counts and the avoiding property") {
  CHECK(avoiding_family(9).family.size() == 9);
  CHECK(avoiding_family(3).family.empty());
  CHECK(avoiding_family(12).family.size() == 67);
  for (int n = 3; n <= 16; ++n) {
    const auto out = avoiding_family(n);
    std::uint64_t expected = 0;
    for (int j = 0; j <= n; j += 2) {
      if (3 * j > 2 * n) expected += oracle::choose(n, j);
    }
    CHECK(out.family.size() == expected);
    CHECK(out.claimed_size == expected);
    CHECK(out.verified->valid);
    for (const auto& m : out.family) CHECK(m.cardinality() % 2 == 0);
  }
  // Unpruned scan on the small cases.
  for (int n = 9; n <= 12; ++n) {
    const auto f = avoiding_family(n, false).family;
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = i + 1; j < f.size(); ++j) CHECK_FALSE(oracle::bisects(f[i], f[j]));
    }
  }
}

TEST_CASE("random approximate families are reproducible per seed") {
  const auto a = random_approx_family(40, 12, 99);
  const auto b = random_approx_family(40, 12, 99);
  const auto c = random_approx_family(40, 12, 100);
  CHECK(a == b);
  CHECK_FALSE(a == c);
  CHECK(a.size() == 12);
  for (const auto& m : random_approx_family(130, 5, 1)) CHECK_FALSE(m.empty());
  CHECK_THROWS_AS(random_approx_family(2, 4, 1), std::invalid_argument);
}

TEST_CASE("approximate verification uses the open interval exactly") {
  const Family one(5, {Subset::from_elements(5, {1, 2})});
  CHECK(approx_verify(one, Rational(1, 10)).valid);
  const Family pair(3, {Subset::from_elements(3, {1, 2}), Subset::from_elements(3, {1, 3})});
  CHECK(approx_verify(pair, Rational(1, 10)).valid);
  // |A∩B|/|A| = 1/3 and 1/4: 1/3 is on the boundary for eps = 1/6, inside for eps = 1/5.
  const Family edge(7, {Subset::from_elements(7, {1, 2, 3}), Subset::from_elements(7, {1, 4, 5, 6})});
  CHECK_FALSE(approx_verify(edge, Rational(1, 6)).valid);
  CHECK(approx_verify(edge, Rational(1, 5)).valid);
  CHECK_THROWS_AS(approx_verify(pair, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(approx_verify(pair, Rational(1, 2)), std::invalid_argument);
}

TEST_CASE("Monte-Carlo summary is deterministic per seed") {
  const auto a = sample_approx(200, 8, Rational(2, 5), 20, 7);
  const auto b = sample_approx(200, 8, Rational(2, 5), 20, 7);
  CHECK(a.successes == b.successes);
  CHECK(a.trials == 20);
  CHECK(a.frequency == doctest::Approx(a.successes / 20.0));
  CHECK(a.size_claim == doctest::Approx(std::exp(2.0 * 0.16 * 200 / 75)));
}

}  // TEST_SUITE
