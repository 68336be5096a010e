#pragma once

#include <string>

#include "heightlab/polyring.hpp"
#include "heightlab/qarith.hpp"

namespace heightlab {

// A logarithmic height together with the exact product of contributing
// norms it is the log of; identities are tested on the exact product.
struct HeightValue {
  double log_value = 0.0;
  Rat norm_product = Rat(1);
};

// ||x||_v = max over coordinate norms, on the canonical representative.
Rat point_norm(const ProjPoint& x, const Place& v);

// ||Q||_v = max over coefficient norms (the Gauss norm at finite places).
Rat poly_norm(const HomPoly& q, const Place& v);

// h(x) = sum_v log ||x||_v over the finitely many places with ||x||_v != 1.
HeightValue height_point(const ProjPoint& x);

// h(Q) = sum_v log ||Q||_v; Q must be nonzero.
HeightValue height_poly(const HomPoly& q);

// Scalar height sum_v log max(1, ||x||_v); x must be nonzero.
HeightValue height_scalar(const Rat& x);

// The exact ratio ||x||_v^d * ||Q||_v / ||Q(x)||_v behind the Weil function.
// Throws if Q(x) = 0 (point lies on the divisor).
Rat weil_ratio(const HomPoly& q, const Place& v, const ProjPoint& x);

// lambda_{Q,v}(x) = log weil_ratio.
double weil(const HomPoly& q, const Place& v, const ProjPoint& x);

// Places where any of ||x||_v, ||Q||_v, ||Q(x)||_v can differ from 1.
PlaceSet weil_support(const HomPoly& q, const ProjPoint& x);

// sum_v lambda_{Q,v}(x) against d*h(x) + h(Q); the two exact norm products
// are equal because prod_v ||Q(x)||_v = 1.
struct WeilIdentity {
  double lhs = 0.0;
  double rhs = 0.0;
  Rat lhs_product = Rat(1);
  Rat rhs_product = Rat(1);
};
WeilIdentity global_weil_identity(const HomPoly& q, const ProjPoint& x);

// Decimal with 12 digits after the point; the report format everywhere.
std::string format_real(double x);

}  // namespace heightlab
