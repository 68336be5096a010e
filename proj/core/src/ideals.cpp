#include "heightlab/ideals.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace heightlab {

MonomialOrder MonomialOrder::weighted(std::vector<Rat> weights) {
  MonomialOrder o(Kind::weighted);
  o.weights_ = std::move(weights);
  return o;
}

MonomialOrder MonomialOrder::eliminate_first(size_t k) {
  MonomialOrder o(Kind::eliminate);
  o.elim_ = k;
  return o;
}

namespace {

int cmp_grevlex(const Monomial& a, const Monomial& b) {
  uint32_t da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (size_t i = a.num_vars(); i-- > 0;) {
    if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? -1 : 1;
  }
  return 0;
}

int cmp_lex(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.num_vars(); ++i)
    if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? -1 : 1;
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.num_vars() != b.num_vars()) throw std::invalid_argument("MonomialOrder: variable count mismatch");
  switch (kind_) {
    case Kind::grevlex:
      return cmp_grevlex(a, b);
    case Kind::lex:
      return cmp_lex(a, b);
    case Kind::weighted: {
      if (weights_.size() != a.num_vars())
        throw std::invalid_argument("MonomialOrder: weight vector length mismatch");
      Rat wa(0), wb(0);
      for (size_t i = 0; i < a.num_vars(); ++i) {
        wa += weights_[i] * static_cast<long>(a.exp(i));
        wb += weights_[i] * static_cast<long>(b.exp(i));
      }
      int c = cmp(wa, wb);
      return c != 0 ? c : cmp_grevlex(a, b);
    }
    case Kind::eliminate: {
      uint32_t da = 0, db = 0;
      for (size_t i = 0; i < elim_ && i < a.num_vars(); ++i) {
        da += a.exp(i);
        db += b.exp(i);
      }
      if (da != db) return da < db ? -1 : 1;
      return cmp_grevlex(a, b);
    }
  }
  return 0;
}

std::string MonomialOrder::str() const {
  switch (kind_) {
    case Kind::grevlex:
      return "grevlex";
    case Kind::lex:
      return "lex";
    case Kind::weighted: {
      std::string out = "weighted(";
      for (size_t i = 0; i < weights_.size(); ++i) {
        if (i) out += ",";
        out += rat_str(weights_[i]);
      }
      return out + ")";
    }
    case Kind::eliminate:
      return "eliminate(" + std::to_string(elim_) + ")";
  }
  return "?";
}

PolyIdeal make_ideal(size_t num_vars, std::vector<HomPoly> gens) {
  PolyIdeal ideal;
  ideal.num_vars = num_vars;
  for (HomPoly& g : gens) {
    if (g.is_zero()) continue;
    if (g.num_vars() != num_vars)
      throw std::invalid_argument("make_ideal: generator variable count mismatch");
    ideal.gens.push_back(std::move(g));
  }
  return ideal;
}

PolyIdeal with_extra_gens(const PolyIdeal& base, const std::vector<HomPoly>& extra) {
  std::vector<HomPoly> gens = base.gens;
  gens.insert(gens.end(), extra.begin(), extra.end());
  return make_ideal(base.num_vars, std::move(gens));
}

// ---------------------------------------------------------------------------
// Internal engine: term vectors sorted descending under the active order.
// Degrees may be mixed (needed for graph ideals during elimination).

namespace {

struct Term {
  Monomial mon;
  Rat coef;
};

using VPoly = std::vector<Term>;

VPoly from_hom(const HomPoly& p, const MonomialOrder& order) {
  VPoly out;
  out.reserve(p.num_terms());
  for (const auto& [m, c] : p.terms()) out.push_back({m, c});
  std::sort(out.begin(), out.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mon, b.mon) > 0; });
  return out;
}

HomPoly to_hom(const VPoly& p, size_t num_vars) {
  if (p.empty()) throw std::logic_error("to_hom: zero polynomial has no degree");
  HomPoly out(num_vars, p.front().mon.degree());
  for (const Term& t : p) out.add_term(t.mon, t.coef);
  return out;
}

// a - c * m * g, both inputs sorted; result sorted.
VPoly sub_scaled(const VPoly& a, size_t a_start, const Rat& c, const Monomial& m, const VPoly& g,
                 const MonomialOrder& order) {
  VPoly out;
  out.reserve(a.size() - a_start + g.size());
  size_t i = a_start, j = 0;
  while (i < a.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial gm = m * g[j].mon;
    if (i == a.size()) {
      Rat coef = -c * g[j].coef;
      if (coef != 0) out.push_back({std::move(gm), std::move(coef)});
      ++j;
      continue;
    }
    int rel = order.compare(a[i].mon, gm);
    if (rel > 0) {
      out.push_back(a[i++]);
    } else if (rel < 0) {
      Rat coef = -c * g[j].coef;
      if (coef != 0) out.push_back({std::move(gm), std::move(coef)});
      ++j;
    } else {
      Rat coef = a[i].coef - c * g[j].coef;
      if (coef != 0) out.push_back({a[i].mon, std::move(coef)});
      ++i;
      ++j;
    }
  }
  return out;
}

void make_primitive(VPoly& p) {
  if (p.empty()) return;
  Int num_gcd(0), den_lcm(1);
  for (const Term& t : p) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coef.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den().get_mpz_t());
  }
  Rat scale = make_rat(den_lcm, num_gcd);
  // sign fixed by the lex-greatest term so printed output leads with +
  const Term* lex_lead = &p.front();
  for (const Term& t : p)
    if (lex_greater(t.mon, lex_lead->mon)) lex_lead = &t;
  if (sgn(lex_lead->coef) < 0) scale = -scale;
  for (Term& t : p) t.coef *= scale;
}

// Full reduction: every term of the remainder is standard.
VPoly reduce_full(VPoly work, const std::vector<VPoly>& basis, const MonomialOrder& order) {
  VPoly result;
  size_t start = 0;
  while (start < work.size()) {
    const Term& lead = work[start];
    bool reduced = false;
    for (const VPoly& g : basis) {
      if (g.empty()) continue;
      if (g.front().mon.divides(lead.mon)) {
        Rat c = lead.coef / g.front().coef;
        Monomial m = g.front().mon.divided_into(lead.mon);
        work = sub_scaled(work, start, c, m, g, order);
        start = 0;
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      result.push_back(work[start]);
      ++start;
    }
  }
  return result;
}

struct SPair {
  size_t i, j;
  Monomial lcm;
  uint32_t sugar;
};

uint32_t poly_sugar(const VPoly& p) {
  uint32_t d = 0;
  for (const Term& t : p) d = std::max(d, t.mon.degree());
  return d;
}

// Buchberger with the sugar selection strategy and both classic criteria.
std::vector<VPoly> buchberger(std::vector<VPoly> gens, const MonomialOrder& order) {
  std::vector<VPoly> basis;
  std::vector<uint32_t> sugar;
  for (VPoly& g : gens) {
    if (g.empty()) continue;
    make_primitive(g);
    sugar.push_back(poly_sugar(g));
    basis.push_back(std::move(g));
  }

  std::vector<SPair> queue;
  auto push_pairs = [&](size_t j) {
    for (size_t i = 0; i < j; ++i) {
      Monomial l = Monomial::lcm(basis[i].front().mon, basis[j].front().mon);
      uint32_t extra_i = l.degree() - basis[i].front().mon.degree();
      uint32_t extra_j = l.degree() - basis[j].front().mon.degree();
      uint32_t s = std::max(sugar[i] + extra_i, sugar[j] + extra_j);
      queue.push_back({i, j, std::move(l), s});
    }
  };
  for (size_t j = 1; j < basis.size(); ++j) push_pairs(j);

  auto in_queue = [&](size_t a, size_t b) {
    if (a > b) std::swap(a, b);
    for (const SPair& p : queue)
      if (p.i == a && p.j == b) return true;
    return false;
  };

  while (!queue.empty()) {
    size_t best = 0;
    for (size_t k = 1; k < queue.size(); ++k) {
      const SPair& a = queue[k];
      const SPair& b = queue[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      int rel = order.compare(a.lcm, b.lcm);
      if (rel != 0) {
        if (rel < 0) best = k;
        continue;
      }
      if (std::tie(a.i, a.j) < std::tie(b.i, b.j)) best = k;
    }
    SPair pair = queue[best];
    queue.erase(queue.begin() + static_cast<long>(best));

    const Monomial& lt_i = basis[pair.i].front().mon;
    const Monomial& lt_j = basis[pair.j].front().mon;
    // product criterion
    if (Monomial::lcm(lt_i, lt_j).degree() == lt_i.degree() + lt_j.degree()) continue;
    // chain criterion
    bool skip = false;
    for (size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pair.i || k == pair.j || basis[k].empty()) continue;
      if (basis[k].front().mon.divides(pair.lcm) && !in_queue(pair.i, k) && !in_queue(pair.j, k))
        skip = true;
    }
    if (skip) continue;

    const VPoly& fi = basis[pair.i];
    const VPoly& fj = basis[pair.j];
    Monomial mi = lt_i.divided_into(pair.lcm);
    Monomial mj = lt_j.divided_into(pair.lcm);
    // s = (lcm/lt_i) fi / lc_i - (lcm/lt_j) fj / lc_j, built as a subtraction
    VPoly lifted;
    lifted.reserve(fi.size());
    for (const Term& t : fi) lifted.push_back({mi * t.mon, t.coef / fi.front().coef});
    VPoly s = sub_scaled(lifted, 0, Rat(1) / fj.front().coef, mj, fj, order);
    VPoly r = reduce_full(std::move(s), basis, order);
    if (r.empty()) continue;
    make_primitive(r);
    sugar.push_back(std::max(pair.sugar, poly_sugar(r)));
    basis.push_back(std::move(r));
    push_pairs(basis.size() - 1);
  }

  // minimize: drop elements whose leading monomial is divisible by another's
  std::vector<char> alive(basis.size(), 1);
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = 0; j < basis.size() && alive[i]; ++j) {
      if (i == j || !alive[j]) continue;
      const Monomial& a = basis[j].front().mon;
      const Monomial& b = basis[i].front().mon;
      if (a.divides(b) && (a != b || j < i)) alive[i] = 0;
    }
  }
  std::vector<VPoly> minimal;
  for (size_t i = 0; i < basis.size(); ++i)
    if (alive[i]) minimal.push_back(std::move(basis[i]));

  // inter-reduce tails; leading monomials are pairwise indivisible already
  std::vector<VPoly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<VPoly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    VPoly r = reduce_full(minimal[i], others, order);
    make_primitive(r);
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const VPoly& a, const VPoly& b) {
    return order.compare(a.front().mon, b.front().mon) < 0;
  });
  return reduced;
}

std::vector<VPoly> basis_vpolys(const GroebnerBasis& gb) {
  std::vector<VPoly> out;
  out.reserve(gb.basis.size());
  for (const HomPoly& g : gb.basis) out.push_back(from_hom(g, gb.order));
  return out;
}

}  // namespace

GroebnerBasis groebner(const PolyIdeal& ideal, const MonomialOrder& order) {
  std::vector<VPoly> gens;
  gens.reserve(ideal.gens.size());
  for (const HomPoly& g : ideal.gens) gens.push_back(from_hom(g, order));
  std::vector<VPoly> reduced = buchberger(std::move(gens), order);
  GroebnerBasis gb;
  gb.num_vars = ideal.num_vars;
  gb.order = order;
  for (const VPoly& p : reduced) {
    gb.leading.push_back(p.front().mon);
    gb.basis.push_back(to_hom(p, ideal.num_vars));
  }
  return gb;
}

HomPoly normal_form(const HomPoly& f, const GroebnerBasis& gb) {
  if (f.num_vars() != gb.num_vars) throw std::invalid_argument("normal_form: variable count mismatch");
  VPoly r = reduce_full(from_hom(f, gb.order), basis_vpolys(gb), gb.order);
  if (r.empty()) return HomPoly::zero(gb.num_vars, f.degree());
  return to_hom(r, gb.num_vars);
}

bool ideal_contains(const GroebnerBasis& gb, const HomPoly& f) {
  return normal_form(f, gb).is_zero();
}

long hilbert_function(const GroebnerBasis& gb, uint32_t u) {
  long count = 0;
  for (const Monomial& m : enumerate_monomials(gb.num_vars, u)) {
    bool standard = true;
    for (const Monomial& lt : gb.leading) {
      if (lt.divides(m)) {
        standard = false;
        break;
      }
    }
    if (standard) ++count;
  }
  return count;
}

long hilbert_function(const PolyIdeal& ideal, uint32_t u) {
  return hilbert_function(groebner(ideal), u);
}

std::vector<Monomial> quotient_basis(const GroebnerBasis& gb, uint32_t u) {
  std::vector<Monomial> out;
  for (const Monomial& m : enumerate_monomials(gb.num_vars, u)) {
    bool standard = true;
    for (const Monomial& lt : gb.leading) {
      if (lt.divides(m)) {
        standard = false;
        break;
      }
    }
    if (standard) out.push_back(m);
  }
  return out;
}

std::vector<Monomial> quotient_basis(const PolyIdeal& ideal, uint32_t u, const MonomialOrder& order) {
  return quotient_basis(groebner(ideal, order), u);
}

DimDeg variety_dim_deg(const PolyIdeal& ideal) {
  const size_t nvars = ideal.num_vars;
  if (nvars == 0) throw std::invalid_argument("variety_dim_deg: no variables");
  const size_t m = nvars - 1;
  uint32_t maxdeg = 1;
  for (const HomPoly& g : ideal.gens) maxdeg = std::max(maxdeg, g.degree());
  const uint32_t u0 = maxdeg * static_cast<uint32_t>(std::max<size_t>(ideal.gens.size(), 1));
  const uint32_t top = u0 + static_cast<uint32_t>(m) + 4;

  GroebnerBasis gb = groebner(ideal);
  std::vector<long> values(top + 1);
  for (uint32_t u = 0; u <= top; ++u) values[u] = hilbert_function(gb, u);
  if (values[top] == 0)
    throw std::domain_error("variety_dim_deg: empty projective zero set (dimension -1)");

  // finite differences: the j-th difference of a degree-j Hilbert polynomial
  // is the constant j! * leading coefficient = the variety degree
  std::vector<std::vector<long>> diff{values};
  for (size_t j = 1; j <= m; ++j) {
    const std::vector<long>& prev = diff.back();
    std::vector<long> next(prev.size() - 1);
    for (size_t i = 0; i + 1 < prev.size(); ++i) next[i] = prev[i + 1] - prev[i];
    diff.push_back(std::move(next));
  }

  for (size_t j = 0; j <= m; ++j) {
    const std::vector<long>& d = diff[j];
    // window longer than the residual polynomial degree, so a nonconstant
    // tail cannot masquerade as a plateau
    const size_t window = std::max<size_t>(3, m - j + 2);
    if (d.size() < window) continue;
    long c = d.back();
    if (c <= 0) continue;
    bool flat = true;
    for (size_t k = d.size() - window; k < d.size(); ++k)
      if (d[k] != c) flat = false;
    if (!flat) continue;
    // cross-check: the interpolating polynomial through the last j+1 values
    // must reproduce the window exactly
    size_t n = j;
    std::vector<Rat> coef(n + 1);  // Newton coefficients on nodes top-n .. top
    std::vector<Rat> vals;
    for (size_t k = 0; k <= n; ++k) vals.emplace_back(values[top - n + k]);
    std::vector<std::vector<Rat>> dd{vals};
    for (size_t lvl = 1; lvl <= n; ++lvl) {
      std::vector<Rat> row(n + 1 - lvl);
      for (size_t k = 0; k + lvl <= n; ++k)
        row[k] = (dd[lvl - 1][k + 1] - dd[lvl - 1][k]) / Rat(static_cast<long>(lvl));
      dd.push_back(std::move(row));
    }
    auto hp = [&](long u) {
      Rat acc(0), prod(1);
      for (size_t lvl = 0; lvl <= n; ++lvl) {
        acc += dd[lvl][0] * prod;
        prod *= Rat(u - static_cast<long>(top - n + lvl));
      }
      return acc;
    };
    bool fits = true;
    for (size_t back = 1; back <= window && fits; ++back) {
      long u = static_cast<long>(top - n) - static_cast<long>(back);
      if (u < 0) break;
      if (hp(u) != Rat(values[static_cast<size_t>(u)])) fits = false;
    }
    if (!fits) continue;
    return {static_cast<int>(n), c};
  }
  throw std::runtime_error("variety_dim_deg: Hilbert polynomial plateau not reached");
}

VarietySpec make_variety(PolyIdeal ideal) {
  DimDeg dd = variety_dim_deg(ideal);
  return VarietySpec{std::move(ideal), dd.dim, dd.deg};
}

bool is_projectively_empty(const PolyIdeal& ideal) {
  for (const HomPoly& g : ideal.gens)
    if (g.degree() == 0 && !g.is_zero()) return true;
  if (ideal.gens.empty()) return false;
  std::vector<uint32_t> degs;
  degs.reserve(ideal.gens.size());
  for (const HomPoly& g : ideal.gens) degs.push_back(g.degree());
  std::sort(degs.rbegin(), degs.rend());
  uint32_t u_max = 1;
  for (size_t i = 0; i < std::min(ideal.num_vars, degs.size()); ++i) u_max += degs[i] - 1;
  // For an empty zero set, the ideal contains every form of degree u_max
  // (Macaulay bound over the num_vars largest degrees); if H(u_max) > 0 the
  // zero set is provably nonempty, so the scan below is always conclusive.
  GroebnerBasis gb = groebner(ideal);
  for (uint32_t u = 1; u <= u_max; ++u)
    if (hilbert_function(gb, u) == 0) return true;
  return false;
}

PolyIdeal eliminate(const PolyIdeal& ideal, const std::vector<size_t>& keep) {
  const size_t nvars = ideal.num_vars;
  for (size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= nvars) throw std::invalid_argument("eliminate: kept index out of range");
    if (i > 0 && keep[i] <= keep[i - 1]) throw std::invalid_argument("eliminate: keep must be ascending");
  }
  std::vector<char> kept(nvars, 0);
  for (size_t k : keep) kept[k] = 1;
  std::vector<size_t> perm;  // new position -> old variable
  for (size_t i = 0; i < nvars; ++i)
    if (!kept[i]) perm.push_back(i);
  const size_t n_elim = perm.size();
  for (size_t k : keep) perm.push_back(k);

  MonomialOrder order = MonomialOrder::eliminate_first(n_elim);
  std::vector<VPoly> gens;
  for (const HomPoly& g : ideal.gens) {
    VPoly p;
    for (const auto& [mon, coef] : g.terms()) {
      std::vector<uint32_t> e(nvars, 0);
      for (size_t pos = 0; pos < nvars; ++pos) e[pos] = mon.exp(perm[pos]);
      p.push_back({Monomial::from_exponents(std::move(e)), coef});
    }
    std::sort(p.begin(), p.end(),
              [&](const Term& a, const Term& b) { return order.compare(a.mon, b.mon) > 0; });
    gens.push_back(std::move(p));
  }

  std::vector<HomPoly> out;
  for (const VPoly& p : buchberger(std::move(gens), order)) {
    bool x_free = true;
    for (const Term& t : p) {
      for (size_t pos = 0; pos < n_elim && x_free; ++pos)
        if (t.mon.exp(pos) > 0) x_free = false;
      if (!x_free) break;
    }
    if (!x_free) continue;
    HomPoly q(keep.size(), p.front().mon.degree());
    for (const Term& t : p) {
      std::vector<uint32_t> e(keep.size());
      for (size_t pos = 0; pos < keep.size(); ++pos) e[pos] = t.mon.exp(n_elim + pos);
      q.add_term(Monomial::from_exponents(std::move(e)), t.coef);
    }
    out.push_back(std::move(q));
  }
  return make_ideal(keep.size(), std::move(out));
}

PolyIdeal image_ideal(const PolyIdeal& variety, const std::vector<HomPoly>& phi) {
  const size_t nx = variety.num_vars;
  const size_t l = phi.size();
  if (l == 0) throw std::invalid_argument("image_ideal: empty map");
  uint32_t e = phi.front().degree();
  for (const HomPoly& p : phi) {
    if (p.num_vars() != nx) throw std::invalid_argument("image_ideal: map variable count mismatch");
    if (p.is_zero() || p.degree() != e || e == 0)
      throw std::invalid_argument("image_ideal: map components must be nonzero of one degree >= 1");
  }
  const size_t total = nx + l;
  if (total > 12)
    throw std::invalid_argument("image_ideal: instance too large for elimination (" +
                                std::to_string(total) + " graph variables, limit 12)");

  MonomialOrder order = MonomialOrder::eliminate_first(nx);
  std::vector<VPoly> gens;
  auto widen = [&](const Monomial& m) {
    std::vector<uint32_t> exps(total, 0);
    for (size_t i = 0; i < nx; ++i) exps[i] = m.exp(i);
    return Monomial::from_exponents(std::move(exps));
  };
  for (const HomPoly& g : variety.gens) {
    VPoly p;
    for (const auto& [mon, coef] : g.terms()) p.push_back({widen(mon), coef});
    std::sort(p.begin(), p.end(),
              [&](const Term& a, const Term& b) { return order.compare(a.mon, b.mon) > 0; });
    gens.push_back(std::move(p));
  }
  for (size_t j = 0; j < l; ++j) {
    VPoly p;
    std::vector<uint32_t> ye(total, 0);
    ye[nx + j] = 1;
    p.push_back({Monomial::from_exponents(std::move(ye)), Rat(1)});
    for (const auto& [mon, coef] : phi[j].terms()) p.push_back({widen(mon), -coef});
    std::sort(p.begin(), p.end(),
              [&](const Term& a, const Term& b) { return order.compare(a.mon, b.mon) > 0; });
    gens.push_back(std::move(p));
  }

  std::vector<HomPoly> out;
  for (const VPoly& p : buchberger(std::move(gens), order)) {
    bool x_free = true;
    for (const Term& t : p)
      for (size_t i = 0; i < nx; ++i)
        if (t.mon.exp(i) > 0) {
          x_free = false;
          break;
        }
    if (!x_free) continue;
    // graph relations are homogeneous for deg y_j = e, so x-free elements
    // are honestly homogeneous in the y's
    HomPoly q(l, p.front().mon.degree());
    for (const Term& t : p) {
      std::vector<uint32_t> exps(l);
      for (size_t j = 0; j < l; ++j) exps[j] = t.mon.exp(nx + j);
      q.add_term(Monomial::from_exponents(std::move(exps)), t.coef);
    }
    out.push_back(std::move(q));
  }
  return make_ideal(l, std::move(out));
}

}  // namespace heightlab
