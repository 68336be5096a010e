#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "heightlab/qarith.hpp"

namespace heightlab {

// Exponent vector of fixed length (one entry per variable x0..xm).
class Monomial {
 public:
  explicit Monomial(size_t num_vars) : e_(num_vars, 0) {}
  Monomial(std::initializer_list<uint32_t> exps) : e_(exps) {}
  static Monomial from_exponents(std::vector<uint32_t> exps);

  size_t num_vars() const { return e_.size(); }
  uint32_t exp(size_t i) const { return e_[i]; }
  const std::vector<uint32_t>& exponents() const { return e_; }
  uint32_t degree() const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;    // this | o
  Monomial divided_into(const Monomial& o) const;  // o / this
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool is_one() const;

  // "1", "x0", "x0^2*x1"
  std::string str() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

 private:
  std::vector<uint32_t> e_;
};

// x0 > x1 > ... ; compares exponent vectors entrywise.
bool lex_greater(const Monomial& a, const Monomial& b);

struct MonomialLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return lex_greater(a, b); }
};

// All monomials of degree d in num_vars variables, lex descending.
std::vector<Monomial> enumerate_monomials(size_t num_vars, uint32_t d);
// Same, indexed by the ambient projective dimension m (so m+1 variables).
std::vector<Monomial> monomials_of_degree(size_t m, uint32_t d);

class ProjPoint;

// Sparse homogeneous polynomial over Q with declared degree. Terms are kept
// in lex-descending key order so iteration and printing are deterministic.
class HomPoly {
 public:
  using TermMap = std::map<Monomial, Rat, MonomialLexGreater>;

  HomPoly(size_t num_vars, uint32_t degree) : nvars_(num_vars), deg_(degree) {}
  static HomPoly zero(size_t num_vars, uint32_t degree) { return HomPoly(num_vars, degree); }
  static HomPoly single(size_t num_vars, const Monomial& m, const Rat& coef);
  static HomPoly variable(size_t num_vars, size_t i);

  size_t num_vars() const { return nvars_; }
  uint32_t degree() const { return deg_; }
  bool is_zero() const { return terms_.empty(); }
  size_t num_terms() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rat coeff(const Monomial& m) const;

  // Accumulates c * m, checking deg(m) == degree(); zero results are erased.
  void add_term(const Monomial& m, const Rat& c);

  HomPoly operator+(const HomPoly& o) const;
  HomPoly operator-(const HomPoly& o) const;
  HomPoly operator-() const;
  HomPoly operator*(const HomPoly& o) const;
  HomPoly operator*(const Rat& c) const;

  Rat evaluate(const std::vector<Rat>& coords) const;
  Rat evaluate(const ProjPoint& x) const;

  HomPoly pow(uint32_t k) const;  // k >= 1

  std::string str() const;

  friend bool operator==(const HomPoly& a, const HomPoly& b);

 private:
  size_t nvars_;
  uint32_t deg_;
  TermMap terms_;
};

// Point of P^m(Q) held in canonical form: coprime integer coordinates with
// the first nonzero one positive. Equality and ordering act on that form.
class ProjPoint {
 public:
  explicit ProjPoint(const std::vector<Rat>& coords);
  static ProjPoint from_ints(std::vector<Int> coords);

  size_t num_coords() const { return coords_.size(); }
  size_t ambient_dim() const { return coords_.size() - 1; }
  const std::vector<Int>& coords() const { return coords_; }
  Rat coord(size_t i) const { return Rat(coords_[i]); }
  std::vector<Rat> coords_rat() const;

  // "(a0:a1:...:am)"
  std::string str() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b);

 private:
  ProjPoint() = default;
  std::vector<Int> coords_;
};

// Grammar: terms joined by + / -; a term is [coef *] product of x<i>[^e];
// e.g. "x0*x2 - x1^2", "3/2*x0^3". Plain rationals are degree-0 terms.
HomPoly parse_poly(std::string_view s, size_t num_vars);
// As above with num_vars inferred as (largest index) + 1.
HomPoly parse_poly(std::string_view s);

// "(a0 : a1 : ... : am)" with rational entries; spaces optional.
ProjPoint parse_point(std::string_view s);

// Replaces each Q_i by Q_i^(d/d_i) with d = lcm of the degrees; returns the
// rescaled family and d. All inputs must be nonzero.
std::pair<std::vector<HomPoly>, uint32_t> normalize_degrees(const std::vector<HomPoly>& qs);

}  // namespace heightlab
