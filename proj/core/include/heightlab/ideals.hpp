#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "heightlab/polyring.hpp"
#include "heightlab/qarith.hpp"

namespace heightlab {

// Monomial order: grevlex by default, or a rational weight vector with
// grevlex tie-break, or a block elimination order on the first k variables.
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, weighted, eliminate };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex); }
  static MonomialOrder weighted(std::vector<Rat> weights);
  static MonomialOrder eliminate_first(size_t k);

  Kind kind() const { return kind_; }
  const std::vector<Rat>& weights() const { return weights_; }
  size_t eliminated() const { return elim_; }

  // <0, 0, >0 as a gets smaller/equal/greater than b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string str() const;

 private:
  explicit MonomialOrder(Kind k) : kind_(k) {}
  Kind kind_;
  std::vector<Rat> weights_;
  size_t elim_ = 0;
};

// Homogeneous ideal given by generators. Zero generators are dropped.
struct PolyIdeal {
  size_t num_vars = 0;
  std::vector<HomPoly> gens;
};

PolyIdeal make_ideal(size_t num_vars, std::vector<HomPoly> gens);
PolyIdeal with_extra_gens(const PolyIdeal& base, const std::vector<HomPoly>& extra);

// Reduced basis: no leading monomial divides another, every element fully
// reduced against the rest, integer content removed, leading coefficient
// positive. Elements sorted by increasing leading monomial.
struct GroebnerBasis {
  size_t num_vars = 0;
  MonomialOrder order = MonomialOrder::grevlex();
  std::vector<HomPoly> basis;
  std::vector<Monomial> leading;  // leading monomial of each element
};

GroebnerBasis groebner(const PolyIdeal& ideal, const MonomialOrder& order = MonomialOrder::grevlex());

// Remainder of f on division by the basis; zero iff f lies in the ideal.
HomPoly normal_form(const HomPoly& f, const GroebnerBasis& gb);
bool ideal_contains(const GroebnerBasis& gb, const HomPoly& f);

// H(u) = dim k[x]_u / I_u = number of degree-u standard monomials.
long hilbert_function(const GroebnerBasis& gb, uint32_t u);
long hilbert_function(const PolyIdeal& ideal, uint32_t u);

// Degree-u monomials not divisible by any leading monomial, lex descending;
// their residues form a basis of the degree-u quotient slice.
std::vector<Monomial> quotient_basis(const GroebnerBasis& gb, uint32_t u);
std::vector<Monomial> quotient_basis(const PolyIdeal& ideal, uint32_t u,
                                     const MonomialOrder& order = MonomialOrder::grevlex());

// Dimension n and degree D read off the Hilbert polynomial, which is fitted
// from values past the regularity plateau: H is evaluated up to
// g*maxdeg + (num_vars - 1) + 4 and the fit must reproduce the tail exactly.
struct DimDeg {
  int dim = 0;
  long deg = 0;
};
DimDeg variety_dim_deg(const PolyIdeal& ideal);

struct VarietySpec {
  PolyIdeal ideal;
  int dim = 0;
  long deg = 0;
};
VarietySpec make_variety(PolyIdeal ideal);

// Emptiness of the projective zero set over the algebraic closure. Decided
// by scanning H(u) for u <= 1 + sum (d_i - 1) over the num_vars largest
// generator degrees; with that bound H(U) = 0 iff the set is empty, so the
// scan is always conclusive.
bool is_projectively_empty(const PolyIdeal& ideal);

// Elimination ideal generated by the basis elements free of the dropped
// variables; `keep` lists the surviving variable indices (ascending), which
// are renumbered 0..keep.size()-1 in the result.
PolyIdeal eliminate(const PolyIdeal& ideal, const std::vector<size_t>& keep);

// Ideal of the closure of the image of V under the map given by equal-degree
// forms phi. Works on the graph ideal {y_j - phi_j(x)} + I_V internally and
// is guarded to graph ideals of at most 12 variables.
PolyIdeal image_ideal(const PolyIdeal& variety, const std::vector<HomPoly>& phi);

}  // namespace heightlab
