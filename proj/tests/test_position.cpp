#include <doctest.h>

#include "heightlab/position.hpp"
#include "test_util.hpp"

using namespace heightlab;

namespace {

VarietySpec p2() { return make_variety(make_ideal(3, {})); }

VarietySpec conic_variety() {
  return make_variety(make_ideal(3, {parse_poly("x0*x2 - x1^2", 3)}));
}

std::vector<HomPoly> lines(std::initializer_list<const char*> ss) {
  std::vector<HomPoly> out;
  for (const char* s : ss) out.push_back(parse_poly(s, 3));
  return out;
}

}  // namespace

TEST_CASE("subgeneral position verdicts") {
  VarietySpec v = p2();
  PositionReport general = check_subgeneral(v, lines({"x0", "x1", "x2", "x0 + x1 + x2"}), 2);
  CHECK(general.holds);
  CHECK_FALSE(general.witness.has_value());

  PositionReport fails = check_subgeneral(v, lines({"x0", "x1", "x0 + x1", "x2"}), 2);
  CHECK_FALSE(fails.holds);
  REQUIRE(fails.witness.has_value());
  CHECK(*fails.witness == std::vector<size_t>{0, 1, 2});  // meet at (0:0:1)

  PositionReport sub3 = check_subgeneral(v, lines({"x0", "x1", "x0 + x1", "x2"}), 3);
  CHECK(sub3.holds);
}

TEST_CASE("subgeneral position preconditions") {
  VarietySpec v = p2();
  CHECK_THROWS_AS(check_subgeneral(v, lines({"x0", "x1", "x2"}), 1), std::invalid_argument);  // N < dim
  CHECK_THROWS_AS(check_subgeneral(v, lines({"x0", "x1"}), 2), std::invalid_argument);  // q < N+1
}

TEST_CASE("holding at N implies holding at larger N") {
  VarietySpec v = p2();
  std::vector<std::vector<HomPoly>> families{
      lines({"x0", "x1", "x2", "x0 + x1 + x2"}),
      lines({"x0", "x1", "x0 + x1", "x2"}),
      lines({"x0", "x1", "x0 + x1 + x2", "x0 - x2", "x1 + x2"}),
  };
  for (const auto& qs : families) {
    for (int n_pos = 2; n_pos + 1 < static_cast<int>(qs.size()); ++n_pos) {
      if (check_subgeneral(v, qs, n_pos).holds) CHECK(check_subgeneral(v, qs, n_pos + 1).holds);
    }
  }
}

TEST_CASE("replacement with N = n keeps the family") {
  VarietySpec v = p2();
  std::vector<HomPoly> qs = lines({"x0", "x1", "x2"});
  ReplacementResult rep = replace_hypersurfaces(v, qs, 7);
  CHECK(rep.attempts == 1);  // structured first try has c_tt = 1
  REQUIRE(rep.polys.size() == 3);
  CHECK(rep.polys[0] == qs[0]);
  CHECK(rep.polys[1] == qs[1]);
  CHECK(rep.polys[2] == qs[2]);
}

TEST_CASE("replacement on the four lines") {
  VarietySpec v = p2();
  std::vector<HomPoly> qs = lines({"x0", "x1", "x0 + x1", "x2"});
  for (uint64_t seed = 0; seed < 10; ++seed) {
    ReplacementResult rep = replace_hypersurfaces(v, qs, seed);
    CHECK(rep.attempts <= 200);
    REQUIRE(rep.polys.size() == 3);
    CHECK(rep.polys[0] == qs[0]);

    // triangular support: P_t = sum_{j=2..N-n+t} c_tj Q_j with N=3, n=2
    REQUIRE(rep.coeffs.size() == 2);
    CHECK(rep.coeffs[0].size() == 2);  // t=2: j in {2,3}
    CHECK(rep.coeffs[1].size() == 3);  // t=3: j in {2,3,4}
    for (size_t t = 0; t < 2; ++t) {
      HomPoly rebuilt(3, 1);
      for (size_t j = 0; j < rep.coeffs[t].size(); ++j)
        rebuilt = rebuilt + qs[j + 1] * rep.coeffs[t][j];
      CHECK(rebuilt == rep.polys[t + 1]);
    }

    // soundness: the replacement family cuts V to the empty set
    CHECK(is_projectively_empty(with_extra_gens(v.ideal, rep.polys)));
  }
}

TEST_CASE("replacement determinism") {
  VarietySpec v = p2();
  std::vector<HomPoly> qs = lines({"x0", "x1", "x0 + x1", "x2"});
  ReplacementResult a = replace_hypersurfaces(v, qs, 12345);
  ReplacementResult b = replace_hypersurfaces(v, qs, 12345);
  CHECK(a.attempts == b.attempts);
  CHECK(a.polys == b.polys);
  CHECK(a.coeffs == b.coeffs);
}

TEST_CASE("replacement on the conic") {
  VarietySpec v = conic_variety();
  CHECK(v.dim == 1);
  std::vector<HomPoly> qs = lines({"x0", "x1", "x0 + x1 + x2", "x0 - x2"});
  for (uint64_t seed = 0; seed < 5; ++seed) {
    ReplacementResult rep = replace_hypersurfaces(v, qs, seed);
    REQUIRE(rep.polys.size() == 2);  // n+1 with n = 1
    CHECK(rep.polys[0] == qs[0]);
    CHECK(is_projectively_empty(with_extra_gens(v.ideal, rep.polys)));
  }
}

TEST_CASE("replacement falls back to random coefficients") {
  // Q1, Q3, Q4 share the zero (0:1:0), so the structured first try fails and
  // the seeded search must find mixing coefficients
  VarietySpec v = p2();
  std::vector<HomPoly> qs = lines({"x0", "x1", "x0 + x2", "x2"});
  REQUIRE(is_projectively_empty(with_extra_gens(v.ideal, qs)));
  for (uint64_t seed = 0; seed < 5; ++seed) {
    ReplacementResult rep = replace_hypersurfaces(v, qs, seed);
    CHECK(rep.attempts > 1);
    CHECK(rep.attempts <= 200);
    CHECK(is_projectively_empty(with_extra_gens(v.ideal, rep.polys)));
    for (size_t t = 0; t < rep.coeffs.size(); ++t) {
      HomPoly rebuilt(3, 1);
      for (size_t j = 0; j < rep.coeffs[t].size(); ++j)
        rebuilt = rebuilt + qs[j + 1] * rep.coeffs[t][j];
      CHECK(rebuilt == rep.polys[t + 1]);
    }
  }
}

TEST_CASE("replacement precondition failures") {
  VarietySpec v = p2();
  // all three vanish at (0:0:1)
  CHECK_THROWS_AS(replace_hypersurfaces(v, lines({"x0", "x1", "x0 + x1"}), 0), std::invalid_argument);
  // mixed degrees
  std::vector<HomPoly> mixed{parse_poly("x0", 3), parse_poly("x1", 3), parse_poly("x0*x2 - x1^2", 3)};
  CHECK_THROWS_AS(replace_hypersurfaces(v, mixed, 0), std::invalid_argument);
  // too few polynomials
  CHECK_THROWS_AS(replace_hypersurfaces(v, lines({"x0", "x1"}), 0), std::invalid_argument);
}
