#include <doctest.h>

#include "heightlab/polyring.hpp"
#include "test_util.hpp"

using namespace heightlab;

namespace {

uint64_t binom(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  uint64_t r = 1;
  for (uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("monomial enumeration") {
  std::vector<Monomial> m12 = monomials_of_degree(1, 2);
  REQUIRE(m12.size() == 3);
  CHECK(m12[0] == Monomial{2, 0});
  CHECK(m12[1] == Monomial{1, 1});
  CHECK(m12[2] == Monomial{0, 2});

  std::vector<Monomial> m21 = monomials_of_degree(2, 1);
  REQUIRE(m21.size() == 3);
  CHECK(m21[0] == Monomial{1, 0, 0});
  CHECK(m21[1] == Monomial{0, 1, 0});
  CHECK(m21[2] == Monomial{0, 0, 1});

  CHECK(monomials_of_degree(2, 3).size() == 10);

  for (size_t m = 0; m <= 8; ++m)
    for (uint32_t d = 0; d <= 8; ++d) {
      std::vector<Monomial> all = monomials_of_degree(m, d);
      CHECK(all.size() == binom(d + m, m));
      for (size_t i = 1; i < all.size(); ++i) CHECK(lex_greater(all[i - 1], all[i]));
    }
}

TEST_CASE("monomial arithmetic") {
  Monomial a{2, 0, 1}, b{1, 1, 0};
  CHECK((a * b) == Monomial{3, 1, 1});
  CHECK(b.divides(a * b));
  CHECK_FALSE(a.divides(b));
  CHECK(b.divided_into(a * b) == a);
  CHECK(Monomial::lcm(a, b) == Monomial{2, 1, 1});
  CHECK(a.str() == "x0^2*x2");
  CHECK(Monomial{0, 0}.is_one());
}

TEST_CASE("evaluation") {
  HomPoly conic = parse_poly("x0*x2 - x1^2", 3);
  CHECK(conic.evaluate(parse_point("(1:1:1)")) == Rat(0));
  CHECK(parse_poly("x0 + x1", 2).evaluate(parse_point("(2:1)")) == Rat(3));
  CHECK(parse_poly("x0^3 - 2*x1^3", 2).evaluate(parse_point("(3:2)")) == Rat(11));
  CHECK_THROWS_AS(conic.evaluate(parse_point("(1:2)")), std::invalid_argument);
}

TEST_CASE("powers") {
  HomPoly s = parse_poly("x0 + x1", 2);
  CHECK(s.pow(2) == parse_poly("x0^2 + 2*x0*x1 + x1^2", 2));
  CHECK(s.pow(1) == s);
  HomPoly d = parse_poly("x0 - x1", 2);
  CHECK(d.pow(3) == parse_poly("x0^3 - 3*x0^2*x1 + 3*x0*x1^2 - x1^3", 2));
  CHECK_THROWS_AS(s.pow(0), std::invalid_argument);

  std::mt19937_64 rng(21);
  for (int iter = 0; iter < 20; ++iter) {
    HomPoly q = testutil::random_poly(rng, 3, 2);
    CHECK(q.pow(5) == q.pow(2) * q.pow(3));
  }
}

TEST_CASE("degree normalization") {
  std::vector<HomPoly> lines;
  for (const char* s : {"x0", "x1", "x0 + x1", "x2"}) lines.push_back(parse_poly(s, 3));
  auto [same, d1] = normalize_degrees(lines);
  CHECK(d1 == 1);
  CHECK(same == lines);

  std::vector<HomPoly> mixed{parse_poly("x0 + x1", 3), parse_poly("x0*x2 - x1^2", 3)};
  auto [two, d2] = normalize_degrees(mixed);
  CHECK(d2 == 2);
  CHECK(two[0] == mixed[0].pow(2));
  CHECK(two[1] == mixed[1]);

  std::vector<HomPoly> mixed23{parse_poly("x0*x1", 2), parse_poly("x0^3 + x1^3", 2)};
  auto [six, d6] = normalize_degrees(mixed23);
  CHECK(d6 == 6);
  CHECK(six[0] == mixed23[0].pow(3));
  CHECK(six[1] == mixed23[1].pow(2));

  CHECK_THROWS_AS(normalize_degrees({HomPoly::zero(2, 1)}), std::invalid_argument);
}

TEST_CASE("projective point canonical form") {
  CHECK(parse_point("(4:6)") == parse_point("(2:3)"));
  CHECK(parse_point("(1/2:1/3)") == parse_point("(3:2)"));
  CHECK(parse_point("(-1:2)").coords()[0] == 1);
  CHECK(parse_point("(-1:2)").coords()[1] == -2);
  CHECK(parse_point("(2:4:6)") == parse_point("(1:2:3)"));
  CHECK(parse_point("(0:-5)") == parse_point("(0:1)"));
  CHECK(parse_point("( 1 : 2 : 3 )").str() == "(1:2:3)");
  CHECK_THROWS_AS(parse_point("(0:0)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_point("1:2"), std::invalid_argument);
}

TEST_CASE("evaluation is stable across representatives") {
  std::mt19937_64 rng(22);
  for (int iter = 0; iter < 100; ++iter) {
    HomPoly q = testutil::random_poly(rng, 3, 3);
    ProjPoint x = testutil::random_point(rng, 3);
    Rat lambda = testutil::random_rat(rng, 40);
    std::vector<Rat> scaled;
    for (size_t i = 0; i < 3; ++i) scaled.push_back(lambda * x.coord(i));
    ProjPoint y(scaled);
    CHECK(x == y);
    CHECK(q.evaluate(x) == q.evaluate(y));
  }
}

TEST_CASE("polynomial grammar round trip") {
  for (const char* s :
       {"x0*x2 - x1^2", "3/2*x0^3", "x0 + x1", "x0^4 - 3*x0^2*x1^2 + x1^4", "0", "7",
        "2*x0*x1*x2 - x2^3 + 1/5*x0^2*x1"}) {
    HomPoly p = parse_poly(s, 3);
    CHECK(parse_poly(p.str(), 3) == p);
  }
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 50; ++iter) {
    HomPoly p = testutil::random_poly(rng, 4, 3);
    CHECK(parse_poly(p.str(), 4) == p);
  }
}

TEST_CASE("parser rejects bad input") {
  CHECK_THROWS_AS(parse_poly("x0 + x1^2", 2), std::invalid_argument);  // inhomogeneous
  CHECK_THROWS_AS(parse_poly("x5", 2), std::invalid_argument);         // out of range
  CHECK_THROWS_AS(parse_poly("x0 +", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("* x0", 2), std::invalid_argument);
  CHECK(parse_poly("x3").num_vars() == 4);  // inferred
}

TEST_CASE("term order inside HomPoly is lex descending") {
  HomPoly p = parse_poly("x1^2 + x0*x2", 3);
  auto it = p.terms().begin();
  CHECK(it->first == Monomial{1, 0, 1});
  ++it;
  CHECK(it->first == Monomial{0, 2, 0});
  CHECK(p.str() == "x0*x2 + x1^2");
}
