#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heightlab/ideals.hpp"
#include "heightlab/polyring.hpp"
#include "heightlab/qarith.hpp"

namespace heightlab {

// Tuple of nonnegative exact rationals c = (c_0, ..., c_m).
class WeightVector {
 public:
  explicit WeightVector(std::vector<Rat> entries);
  size_t size() const { return c_.size(); }
  const Rat& operator[](size_t i) const { return c_[i]; }
  const std::vector<Rat>& entries() const { return c_; }
  Rat max_entry() const;
  Rat weight_of(const Monomial& m) const;  // sum exps * entries
  std::string str() const;

 private:
  std::vector<Rat> c_;
};

// Comma-separated rationals, e.g. "1,0,3/2".
WeightVector parse_weights(std::string_view csv);

// Maximal total c-weight of a degree-u monomial basis of the quotient slice,
// with a witnessing basis. Matroid greedy over residues: monomials sorted by
// weight (lex tie-break) are kept when linearly independent modulo I.
struct HilbertWeight {
  Rat value;
  std::vector<Monomial> basis;
};
HilbertWeight hilbert_weight(const GroebnerBasis& gb, uint32_t u, const WeightVector& c);
HilbertWeight hilbert_weight(const PolyIdeal& ideal, uint32_t u, const WeightVector& c);

// Chow form: polynomial in dim+1 blocks u_i = (u_{i0},...,u_{im}) of m+1
// variables, homogeneous of the variety degree in each block. Variable
// u_{ij} maps to flat index i*(m+1)+j.
struct ChowForm {
  size_t ambient_m = 0;
  size_t dim_n = 0;
  HomPoly poly = HomPoly(1, 0);

  size_t var_index(size_t block, size_t j) const { return block * (ambient_m + 1) + j; }
  std::string str() const;  // expanded form with u<i>_<j> names
};

ChowForm chow_form_point(const ProjPoint& p);
// Linear subvariety spanned by independent points; the full space P^m gives
// the block determinant det(u_{ij}).
ChowForm chow_form_linear(const std::vector<ProjPoint>& span, size_t ambient_m);
// Hypersurface {F = 0}: F evaluated on the generalized cross product of the
// m blocks (signed maximal minors of the block coefficient matrix).
ChowForm chow_form_hypersurface(const HomPoly& f);

// e_X(c) or a certified interval around it.
struct ChowWeightResult {
  Rat lo, hi;
  bool exact = false;
  uint32_t estimate_u = 0;  // set when estimated
};

// Exact Chow weight: substitute u_{ij} -> t^{c_j} u_{ij}; group monomials by
// t-exponent and return the largest exponent of a nonzero group.
ChowWeightResult chow_weight(const ChowForm& cf, const WeightVector& c);
// Exponent -> group polynomial map of that substitution (all groups nonzero).
std::map<Rat, HomPoly> chow_weight_decomposition(const ChowForm& cf, const WeightVector& c);

// Constant convention for the Hilbert-weight bound: `ambient` uses the
// ambient dimension (m+1, 2m+1), `dimension` the variety dimension
// (n+1, 2n+1). Both hold; dimension is the sharper reading.
enum class BoundConvention { ambient, dimension };

// Interval for e_X(c) from the Hilbert-weight bound at level u > deg X:
// upper from the rearranged bound, lower from the best coordinate-subset
// bound (or 0 when no subset qualifies).
ChowWeightResult chow_weight_estimate(const PolyIdeal& ideal, const WeightVector& c, uint32_t u,
                                      BoundConvention conv = BoundConvention::dimension);

// Exact Chow weight for the supported classes (empty ideal, linear ideals,
// hypersurfaces), together with the form; nullopt outside those classes.
std::optional<std::pair<ChowWeightResult, ChowForm>> chow_weight_exact(const PolyIdeal& ideal,
                                                                       const WeightVector& c);

// S_X(u,c)/(u H_X(u)) - e_X(c)/(K1 D) + K2 D / u * max c >= 0, the
// Hilbert-weight lower bound; returns the exact margin.
struct BoundCheck {
  bool holds = false;
  Rat margin;
};
BoundCheck check_hilbert_weight_bound(const PolyIdeal& ideal, const WeightVector& c, uint32_t u,
                                      const Rat& e_exact, BoundConvention conv = BoundConvention::dimension);

// e_Y(c) >= (c_{i_0} + ... + c_{i_n}) * deg Y for a coordinate subset whose
// vanishing locus misses Y. `certified` is false when only the estimated
// interval was available and the lower end does not already clear the bound.
struct ChowLowerBoundCheck {
  bool holds = false;
  bool certified = false;
  bool exact = false;
  Rat slack;
};
ChowLowerBoundCheck check_chow_weight_lower_bound(const PolyIdeal& ideal_y, const WeightVector& c,
                                                  const std::vector<size_t>& subset);

// Column scaling of the bracket det(u_{i j_t}) multiplies it by t^(sum of
// the selected c_j); verified symbolically.
bool bracket_weight_check(const std::vector<size_t>& subset_j, const WeightVector& c);

}  // namespace heightlab
