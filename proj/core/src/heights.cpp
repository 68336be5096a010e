#include "heightlab/heights.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <iterator>
#include <stdexcept>

namespace heightlab {

namespace {

// Union of already-sorted place sets.
PlaceSet merge_places(const PlaceSet& a, const PlaceSet& b) {
  PlaceSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

PlaceSet point_support(const ProjPoint& x) {
  PlaceSet s{Place::infinity()};
  for (const Int& c : x.coords())
    if (c != 0) s = merge_places(s, relevant_places(Rat(c)));
  return s;
}

PlaceSet poly_support(const HomPoly& q) {
  PlaceSet s{Place::infinity()};
  for (const auto& [m, c] : q.terms()) s = merge_places(s, relevant_places(c));
  return s;
}

HeightValue accumulate(const PlaceSet& places, const std::function<Rat(const Place&)>& local) {
  HeightValue h;
  for (const Place& v : places) h.norm_product *= local(v);
  h.log_value = log_rat(h.norm_product);
  return h;
}

}  // namespace

Rat point_norm(const ProjPoint& x, const Place& v) {
  Rat best(0);
  for (const Int& c : x.coords()) {
    if (c == 0) continue;
    Rat n = norm(Rat(c), v);
    if (n > best) best = n;
  }
  return best;
}

Rat poly_norm(const HomPoly& q, const Place& v) {
  if (q.is_zero()) throw std::invalid_argument("poly_norm: zero polynomial");
  Rat best(0);
  for (const auto& [m, c] : q.terms()) {
    Rat n = norm(c, v);
    if (n > best) best = n;
  }
  return best;
}

HeightValue height_point(const ProjPoint& x) {
  return accumulate(point_support(x), [&](const Place& v) { return point_norm(x, v); });
}

HeightValue height_poly(const HomPoly& q) {
  if (q.is_zero()) throw std::invalid_argument("height_poly: zero polynomial");
  return accumulate(poly_support(q), [&](const Place& v) { return poly_norm(q, v); });
}

HeightValue height_scalar(const Rat& x) {
  if (x == 0) throw std::invalid_argument("height_scalar: zero argument");
  return accumulate(relevant_places(x), [&](const Place& v) {
    Rat n = norm(x, v);
    return n > 1 ? n : Rat(1);
  });
}

Rat weil_ratio(const HomPoly& q, const Place& v, const ProjPoint& x) {
  Rat value = q.evaluate(x);
  if (value == 0) throw std::domain_error("weil: point lies on the divisor");
  return rat_pow(point_norm(x, v), q.degree()) * poly_norm(q, v) / norm(value, v);
}

double weil(const HomPoly& q, const Place& v, const ProjPoint& x) {
  return log_rat(weil_ratio(q, v, x));
}

PlaceSet weil_support(const HomPoly& q, const ProjPoint& x) {
  Rat value = q.evaluate(x);
  if (value == 0) throw std::domain_error("weil: point lies on the divisor");
  return merge_places(merge_places(point_support(x), poly_support(q)), relevant_places(value));
}

WeilIdentity global_weil_identity(const HomPoly& q, const ProjPoint& x) {
  PlaceSet places = weil_support(q, x);
  WeilIdentity out;
  for (const Place& v : places) out.lhs_product *= weil_ratio(q, v, x);
  Rat xprod(1), qprod(1);
  for (const Place& v : places) {
    xprod *= point_norm(x, v);
    qprod *= poly_norm(q, v);
  }
  out.rhs_product = rat_pow(xprod, q.degree()) * qprod;
  out.lhs = log_rat(out.lhs_product);
  out.rhs = log_rat(out.rhs_product);
  return out;
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", x);
  return buf;
}

}  // namespace heightlab
