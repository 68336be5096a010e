#include <doctest.h>

#include "heightlab/qarith.hpp"
#include "test_util.hpp"

using namespace heightlab;

TEST_CASE("normalized absolute values") {
  Place inf = Place::infinity();
  Place two = Place::finite(Int(2));
  Place three = Place::finite(Int(3));

  CHECK(norm(Rat(12), two) == make_rat(1, 4));
  CHECK(norm(make_rat(-3, 4), inf) == make_rat(3, 4));
  CHECK(norm(Rat(5), three) == Rat(1));
  CHECK(norm(Rat(0), two) == Rat(0));
  CHECK(norm(Rat(0), inf) == Rat(0));
  CHECK(norm(make_rat(1, 9), three) == Rat(9));
}

TEST_CASE("norm multiplicativity") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    Rat x = testutil::random_rat(rng);
    Rat y = testutil::random_rat(rng);
    PlaceSet places = relevant_places(x);
    for (const Place& v : relevant_places(y))
      if (!place_set_contains(places, v)) places.push_back(v);
    for (const Place& v : places) CHECK(norm(x * y, v) == norm(x, v) * norm(y, v));
  }
}

TEST_CASE("ultrametric inequality at finite places") {
  std::mt19937_64 rng(12);
  std::vector<Place> ps{Place::finite(Int(2)), Place::finite(Int(3)), Place::finite(Int(5)),
                        Place::finite(Int(7))};
  for (int iter = 0; iter < 200; ++iter) {
    Rat x = testutil::random_rat(rng);
    Rat y = testutil::random_rat(rng);
    if (x + y == 0) continue;
    for (const Place& p : ps) {
      Rat lhs = norm(x + y, p);
      Rat rhs = std::max(norm(x, p), norm(y, p));
      CHECK(lhs <= rhs);
    }
  }
}

TEST_CASE("relevant places") {
  PlaceSet s = relevant_places(Rat(6));
  REQUIRE(s.size() == 3);
  CHECK(s[0].is_infinite());
  CHECK(s[1].prime() == 2);
  CHECK(s[2].prime() == 3);

  CHECK(relevant_places(Rat(1)).size() == 1);

  PlaceSet t = relevant_places(make_rat(-35, 4));
  REQUIRE(t.size() == 4);
  CHECK(t[0].is_infinite());
  CHECK(t[1].prime() == 2);
  CHECK(t[2].prime() == 5);
  CHECK(t[3].prime() == 7);

  CHECK_THROWS_AS(relevant_places(Rat(0)), std::invalid_argument);

  // norms are 1 outside the relevant set
  Rat x = make_rat(-35, 4);
  for (long q : {3L, 11L, 13L}) CHECK(norm(x, Place::finite(Int(q))) == Rat(1));
}

TEST_CASE("product formula") {
  CHECK(product_formula_check(Rat(6)) == Rat(1));
  CHECK(product_formula_check(Rat(1)) == Rat(1));
  CHECK(product_formula_check(make_rat(-35, 4)) == Rat(1));
  CHECK_THROWS_AS(product_formula_check(Rat(0)), std::invalid_argument);

  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 300; ++iter)
    CHECK(product_formula_check(testutil::random_rat(rng, 100000)) == Rat(1));
}

TEST_CASE("primality") {
  CHECK(is_prime(Int(2)));
  CHECK(is_prime(Int(3)));
  CHECK(is_prime(Int(97)));
  CHECK(is_prime(Int("2147483647")));       // 2^31 - 1
  CHECK(is_prime(Int("1000000000000037")));
  CHECK_FALSE(is_prime(Int(0)));
  CHECK_FALSE(is_prime(Int(1)));
  CHECK_FALSE(is_prime(Int(4)));
  CHECK_FALSE(is_prime(Int(561)));   // Carmichael
  CHECK_FALSE(is_prime(Int(-7)));
}

TEST_CASE("prime factors") {
  std::vector<Int> f = prime_factors(Int(720));
  REQUIRE(f.size() == 3);
  CHECK(f[0] == 2);
  CHECK(f[1] == 3);
  CHECK(f[2] == 5);

  // large semiprime exercises the rho fallback
  Int big = Int("1000003") * Int("1000033");
  std::vector<Int> g = prime_factors(big);
  REQUIRE(g.size() == 2);
  CHECK(g[0] == 1000003);
  CHECK(g[1] == 1000033);

  CHECK(prime_factors(Int(-9)) == std::vector<Int>{Int(3)});
  CHECK_THROWS_AS(prime_factors(Int(0)), std::invalid_argument);
}

TEST_CASE("places: construction, order, printing") {
  CHECK_THROWS_AS(Place::finite(Int(4)), std::invalid_argument);
  CHECK_THROWS_AS(Place::finite(Int(1)), std::invalid_argument);

  Place inf = Place::infinity();
  Place two = Place::finite(Int(2));
  Place three = Place::finite(Int(3));
  CHECK(inf < two);
  CHECK(two < three);
  CHECK(inf.str() == "inf");
  CHECK(three.str() == "p=3");
  CHECK(Place::parse("inf") == inf);
  CHECK(Place::parse("p=3") == three);
  CHECK(Place::parse("3") == three);
  CHECK(Place::local_degree == 1);

  CHECK_THROWS_AS(make_place_set({two, two}), std::invalid_argument);
  PlaceSet s = make_place_set({three, inf, two});
  CHECK(s[0] == inf);
  CHECK(place_set_str(s) == "inf,2,3");
  CHECK(parse_place_set("inf, 2,3") == s);
}

TEST_CASE("rational parse/print round trip") {
  for (const char* s : {"0", "1", "-1", "22/7", "-3/4", "123456789123456789"}) {
    Rat x = parse_rat(s);
    CHECK(rat_str(x) == s);
  }
  CHECK(rat_str(parse_rat("4/6")) == "2/3");
  CHECK(rat_str(parse_rat("+5")) == "5");
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
}

TEST_CASE("log_rat handles huge operands") {
  Rat x = rat_pow(Rat(10), 400);  // beyond double range
  CHECK(log_rat(x) == doctest::Approx(400.0 * std::log(10.0)).epsilon(1e-12));
  CHECK(log_rat(Rat(1)) == 0.0);
  CHECK_THROWS_AS(log_rat(Rat(0)), std::domain_error);
  CHECK_THROWS_AS(log_rat(Rat(-2)), std::domain_error);
}
