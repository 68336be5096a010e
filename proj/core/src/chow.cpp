#include "heightlab/chow.hpp"

#include <algorithm>
#include <stdexcept>

namespace heightlab {

WeightVector::WeightVector(std::vector<Rat> entries) : c_(std::move(entries)) {
  if (c_.empty()) throw std::invalid_argument("WeightVector: empty");
  for (const Rat& x : c_)
    if (x < 0) throw std::invalid_argument("WeightVector: negative entry " + rat_str(x));
}

Rat WeightVector::max_entry() const {
  Rat best = c_[0];
  for (const Rat& x : c_)
    if (x > best) best = x;
  return best;
}

Rat WeightVector::weight_of(const Monomial& m) const {
  if (m.num_vars() != c_.size()) throw std::invalid_argument("WeightVector: dimension mismatch");
  Rat acc(0);
  for (size_t i = 0; i < c_.size(); ++i)
    if (m.exp(i) > 0) acc += c_[i] * static_cast<long>(m.exp(i));
  return acc;
}

std::string WeightVector::str() const {
  std::string out;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ",";
    out += rat_str(c_[i]);
  }
  return out;
}

WeightVector parse_weights(std::string_view csv) {
  std::vector<Rat> out;
  size_t pos = 0;
  while (pos <= csv.size()) {
    size_t comma = csv.find(',', pos);
    if (comma == std::string_view::npos) comma = csv.size();
    std::string_view tok = csv.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty()) out.push_back(parse_rat(tok));
    if (comma == csv.size()) break;
    pos = comma + 1;
  }
  return WeightVector(std::move(out));
}

HilbertWeight hilbert_weight(const GroebnerBasis& gb, uint32_t u, const WeightVector& c) {
  if (u < 1) throw std::invalid_argument("hilbert_weight: u must be >= 1");
  if (c.size() != gb.num_vars) throw std::invalid_argument("hilbert_weight: weight length mismatch");

  std::vector<Monomial> standard = quotient_basis(gb, u);
  const size_t dim = standard.size();
  std::map<Monomial, size_t, MonomialLexGreater> column;
  for (size_t i = 0; i < dim; ++i) column.emplace(standard[i], i);

  std::vector<Monomial> mons = enumerate_monomials(gb.num_vars, u);
  // stable sort keeps the lex-descending enumeration order inside weight ties
  std::stable_sort(mons.begin(), mons.end(), [&](const Monomial& a, const Monomial& b) {
    return c.weight_of(a) > c.weight_of(b);
  });

  std::vector<std::vector<Rat>> rows;   // echelon rows over the standard basis
  std::vector<size_t> pivots;
  HilbertWeight out{Rat(0), {}};
  for (const Monomial& m : mons) {
    if (out.basis.size() == dim) break;
    HomPoly nf = normal_form(HomPoly::single(gb.num_vars, m, Rat(1)), gb);
    std::vector<Rat> v(dim, Rat(0));
    for (const auto& [mon, coef] : nf.terms()) v[column.at(mon)] = coef;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (v[pivots[r]] == 0) continue;
      Rat factor = v[pivots[r]] / rows[r][pivots[r]];
      for (size_t k = 0; k < dim; ++k) v[k] -= factor * rows[r][k];
    }
    size_t pivot = dim;
    for (size_t k = 0; k < dim; ++k)
      if (v[k] != 0) {
        pivot = k;
        break;
      }
    if (pivot == dim) continue;  // residue dependent on choices so far
    rows.push_back(std::move(v));
    pivots.push_back(pivot);
    out.value += c.weight_of(m);
    out.basis.push_back(m);
  }
  return out;
}

HilbertWeight hilbert_weight(const PolyIdeal& ideal, uint32_t u, const WeightVector& c) {
  return hilbert_weight(groebner(ideal), u, c);
}

std::string ChowForm::str() const {
  if (poly.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, coef] : poly.terms()) {
    Rat a = abs(coef);
    if (first) {
      if (sgn(coef) < 0) out += "-";
      first = false;
    } else {
      out += sgn(coef) < 0 ? " - " : " + ";
    }
    std::string mono;
    for (size_t idx = 0; idx < m.num_vars(); ++idx) {
      if (m.exp(idx) == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "u" + std::to_string(idx / (ambient_m + 1)) + "_" + std::to_string(idx % (ambient_m + 1));
      if (m.exp(idx) > 1) mono += "^" + std::to_string(m.exp(idx));
    }
    if (mono.empty()) {
      out += rat_str(a);
    } else if (a == 1) {
      out += mono;
    } else {
      out += rat_str(a) + "*" + mono;
    }
  }
  return out;
}

namespace {

// Laplace expansion along the first row; fine for the <= 4x4 blocks here.
HomPoly poly_det(const std::vector<std::vector<HomPoly>>& m) {
  const size_t n = m.size();
  if (n == 1) return m[0][0];
  const size_t nvars = m[0][0].num_vars();
  uint32_t deg = 0;
  for (size_t i = 0; i < n; ++i) deg += m[i][0].degree();
  HomPoly acc(nvars, deg);
  for (size_t j = 0; j < n; ++j) {
    std::vector<std::vector<HomPoly>> minor;
    minor.reserve(n - 1);
    for (size_t r = 1; r < n; ++r) {
      std::vector<HomPoly> row;
      row.reserve(n - 1);
      for (size_t s = 0; s < n; ++s)
        if (s != j) row.push_back(m[r][s]);
      minor.push_back(std::move(row));
    }
    HomPoly term = m[0][j] * poly_det(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

HomPoly block_var(size_t blocks, size_t ambient_m, size_t block, size_t j) {
  return HomPoly::variable(blocks * (ambient_m + 1), block * (ambient_m + 1) + j);
}

// Row reduction; returns the rank.
size_t rank_of(std::vector<std::vector<Rat>> rows) {
  size_t rank = 0;
  const size_t cols = rows.empty() ? 0 : rows[0].size();
  for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
    size_t sel = rank;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    for (size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      Rat f = rows[r][col] / rows[rank][col];
      for (size_t k = col; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Basis of the right kernel of the generator coefficient matrix.
std::vector<std::vector<Rat>> kernel_basis(const std::vector<std::vector<Rat>>& rows_in, size_t cols) {
  std::vector<std::vector<Rat>> rows = rows_in;
  std::vector<size_t> pivot_col;
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
    size_t sel = rank;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    Rat inv = Rat(1) / rows[rank][col];
    for (size_t k = 0; k < cols; ++k) rows[rank][k] *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rat f = rows[r][col];
      for (size_t k = 0; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<char> is_pivot(cols, 0);
  for (size_t c : pivot_col) is_pivot[c] = 1;
  std::vector<std::vector<Rat>> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[free] = 1;
    for (size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

ChowForm chow_form_point(const ProjPoint& p) {
  const size_t m = p.ambient_dim();
  ChowForm cf;
  cf.ambient_m = m;
  cf.dim_n = 0;
  HomPoly acc(m + 1, 1);
  for (size_t j = 0; j <= m; ++j) acc = acc + block_var(1, m, 0, j) * p.coord(j);
  cf.poly = std::move(acc);
  return cf;
}

ChowForm chow_form_linear(const std::vector<ProjPoint>& span, size_t ambient_m) {
  if (span.empty()) throw std::invalid_argument("chow_form_linear: empty span");
  const size_t n1 = span.size();  // n+1 spanning points
  std::vector<std::vector<Rat>> rows;
  for (const ProjPoint& p : span) {
    if (p.num_coords() != ambient_m + 1)
      throw std::invalid_argument("chow_form_linear: point dimension mismatch");
    rows.push_back(p.coords_rat());
  }
  if (rank_of(rows) != n1) throw std::invalid_argument("chow_form_linear: dependent span");

  const size_t nvars = n1 * (ambient_m + 1);
  std::vector<std::vector<HomPoly>> mat(n1, std::vector<HomPoly>(n1, HomPoly(nvars, 1)));
  for (size_t i = 0; i < n1; ++i)
    for (size_t t = 0; t < n1; ++t) {
      HomPoly dot(nvars, 1);
      for (size_t j = 0; j <= ambient_m; ++j)
        dot = dot + block_var(n1, ambient_m, i, j) * span[t].coord(j);
      mat[i][t] = std::move(dot);
    }
  ChowForm cf;
  cf.ambient_m = ambient_m;
  cf.dim_n = n1 - 1;
  cf.poly = poly_det(mat);
  return cf;
}

ChowForm chow_form_hypersurface(const HomPoly& f) {
  if (f.is_zero() || f.degree() < 1)
    throw std::invalid_argument("chow_form_hypersurface: need a nonzero form of degree >= 1");
  const size_t m = f.num_vars() - 1;  // ambient dimension
  if (m < 1) throw std::invalid_argument("chow_form_hypersurface: ambient dimension must be >= 1");
  const size_t nvars = m * (m + 1);

  // generalized cross product of the m block rows: p_j = (-1)^j * (minor
  // deleting column j); the hyperplanes u_1..u_m meet in the point p
  std::vector<HomPoly> p;
  p.reserve(m + 1);
  for (size_t j = 0; j <= m; ++j) {
    std::vector<std::vector<HomPoly>> minor;
    for (size_t i = 0; i < m; ++i) {
      std::vector<HomPoly> row;
      for (size_t s = 0; s <= m; ++s)
        if (s != j) row.push_back(block_var(m, m, i, s));
      minor.push_back(std::move(row));
    }
    HomPoly d = poly_det(minor);
    p.push_back(j % 2 == 0 ? d : -d);
  }

  HomPoly acc(nvars, f.degree() * static_cast<uint32_t>(m));
  for (const auto& [mon, coef] : f.terms()) {
    HomPoly term(nvars, 0);
    bool started = false;
    for (size_t j = 0; j <= m; ++j) {
      if (mon.exp(j) == 0) continue;
      HomPoly factor = p[j].pow(mon.exp(j));
      term = started ? term * factor : factor;
      started = true;
    }
    if (!started) throw std::logic_error("chow_form_hypersurface: constant term");
    acc = acc + term * coef;
  }
  ChowForm cf;
  cf.ambient_m = m;
  cf.dim_n = m - 1;
  cf.poly = std::move(acc);
  return cf;
}

std::map<Rat, HomPoly> chow_weight_decomposition(const ChowForm& cf, const WeightVector& c) {
  if (c.size() != cf.ambient_m + 1)
    throw std::invalid_argument("chow_weight: weight length must be ambient dimension + 1");
  std::map<Rat, HomPoly> groups;
  for (const auto& [mon, coef] : cf.poly.terms()) {
    Rat texp(0);
    for (size_t idx = 0; idx < mon.num_vars(); ++idx)
      if (mon.exp(idx) > 0) texp += c[idx % (cf.ambient_m + 1)] * static_cast<long>(mon.exp(idx));
    auto it = groups.find(texp);
    if (it == groups.end())
      it = groups.emplace(texp, HomPoly(cf.poly.num_vars(), cf.poly.degree())).first;
    it->second.add_term(mon, coef);
  }
  // distinct monomials cannot cancel across a group, so every group is
  // nonzero; kept as a guard for future constructors
  for (auto it = groups.begin(); it != groups.end();) {
    if (it->second.is_zero())
      it = groups.erase(it);
    else
      ++it;
  }
  return groups;
}

ChowWeightResult chow_weight(const ChowForm& cf, const WeightVector& c) {
  if (cf.poly.is_zero()) throw std::invalid_argument("chow_weight: zero Chow form");
  auto groups = chow_weight_decomposition(cf, c);
  ChowWeightResult out;
  out.exact = true;
  out.lo = out.hi = groups.rbegin()->first;
  return out;
}

std::optional<std::pair<ChowWeightResult, ChowForm>> chow_weight_exact(const PolyIdeal& ideal,
                                                                       const WeightVector& c) {
  const size_t m = ideal.num_vars - 1;
  if (ideal.gens.empty()) {
    std::vector<ProjPoint> span;
    for (size_t j = 0; j <= m; ++j) {
      std::vector<Int> e(m + 1, Int(0));
      e[j] = 1;
      span.push_back(ProjPoint::from_ints(std::move(e)));
    }
    ChowForm cf = chow_form_linear(span, m);
    return std::make_pair(chow_weight(cf, c), std::move(cf));
  }
  bool all_linear = std::all_of(ideal.gens.begin(), ideal.gens.end(),
                                [](const HomPoly& g) { return g.degree() == 1; });
  if (all_linear) {
    std::vector<std::vector<Rat>> rows;
    for (const HomPoly& g : ideal.gens) {
      std::vector<Rat> row(m + 1, Rat(0));
      for (const auto& [mon, coef] : g.terms())
        for (size_t j = 0; j <= m; ++j)
          if (mon.exp(j) == 1) row[j] = coef;
      rows.push_back(std::move(row));
    }
    auto kernel = kernel_basis(rows, m + 1);
    if (kernel.empty()) throw std::domain_error("chow_weight_exact: empty variety");
    std::vector<ProjPoint> span;
    span.reserve(kernel.size());
    for (auto& v : kernel) span.emplace_back(v);
    ChowForm cf = chow_form_linear(span, m);
    return std::make_pair(chow_weight(cf, c), std::move(cf));
  }
  if (ideal.gens.size() == 1 && m >= 1) {
    ChowForm cf = chow_form_hypersurface(ideal.gens.front());
    return std::make_pair(chow_weight(cf, c), std::move(cf));
  }
  return std::nullopt;
}

namespace {

// (K1, K2) of the bound for the chosen convention.
std::pair<long, long> bound_constants(BoundConvention conv, size_t ambient_m, int dim_n) {
  if (conv == BoundConvention::ambient)
    return {static_cast<long>(ambient_m) + 1, 2 * static_cast<long>(ambient_m) + 1};
  return {dim_n + 1, 2 * dim_n + 1};
}

std::vector<HomPoly> coordinate_forms(size_t num_vars, const std::vector<size_t>& subset) {
  std::vector<HomPoly> out;
  out.reserve(subset.size());
  for (size_t j : subset) out.push_back(HomPoly::variable(num_vars, j));
  return out;
}

}  // namespace

ChowWeightResult chow_weight_estimate(const PolyIdeal& ideal, const WeightVector& c, uint32_t u,
                                      BoundConvention conv) {
  if (c.size() != ideal.num_vars)
    throw std::invalid_argument("chow_weight_estimate: weight length mismatch");
  DimDeg dd = variety_dim_deg(ideal);
  if (u <= static_cast<uint32_t>(dd.deg))
    throw std::invalid_argument("chow_weight_estimate: need u > deg = " + std::to_string(dd.deg));
  GroebnerBasis gb = groebner(ideal);
  long h = hilbert_function(gb, u);
  HilbertWeight s = hilbert_weight(gb, u, c);
  auto [k1, k2] = bound_constants(conv, ideal.num_vars - 1, dd.dim);
  Rat delta(dd.deg);
  Rat upper = Rat(k1) * delta *
              (s.value / (Rat(static_cast<long>(u)) * h) +
               Rat(k2) * delta / static_cast<long>(u) * c.max_entry());

  // best coordinate-subset lower bound, if any subset qualifies
  Rat lower(0);
  const size_t m1 = ideal.num_vars;
  std::vector<size_t> subset(static_cast<size_t>(dd.dim) + 1);
  auto rec = [&](auto&& self, size_t pos, size_t next) -> void {
    if (pos == subset.size()) {
      if (is_projectively_empty(with_extra_gens(ideal, coordinate_forms(m1, subset)))) {
        Rat sum(0);
        for (size_t j : subset) sum += c[j];
        if (sum * delta > lower) lower = sum * delta;
      }
      return;
    }
    for (size_t j = next; j < m1; ++j) {
      subset[pos] = j;
      self(self, pos + 1, j + 1);
    }
  };
  rec(rec, 0, 0);

  ChowWeightResult out;
  out.exact = false;
  out.estimate_u = u;
  out.lo = lower;
  out.hi = upper;
  if (out.lo > out.hi) throw std::logic_error("chow_weight_estimate: inconsistent interval");
  return out;
}

BoundCheck check_hilbert_weight_bound(const PolyIdeal& ideal, const WeightVector& c, uint32_t u,
                                      const Rat& e_exact, BoundConvention conv) {
  DimDeg dd = variety_dim_deg(ideal);
  if (u <= static_cast<uint32_t>(dd.deg))
    throw std::invalid_argument("check_hilbert_weight_bound: need u > deg = " + std::to_string(dd.deg));
  GroebnerBasis gb = groebner(ideal);
  long h = hilbert_function(gb, u);
  HilbertWeight s = hilbert_weight(gb, u, c);
  auto [k1, k2] = bound_constants(conv, ideal.num_vars - 1, dd.dim);
  Rat delta(dd.deg);
  Rat margin = s.value / (Rat(static_cast<long>(u)) * h) - e_exact / (Rat(k1) * delta) +
               Rat(k2) * delta / static_cast<long>(u) * c.max_entry();
  return BoundCheck{margin >= 0, margin};
}

ChowLowerBoundCheck check_chow_weight_lower_bound(const PolyIdeal& ideal_y, const WeightVector& c,
                                                  const std::vector<size_t>& subset) {
  if (c.size() != ideal_y.num_vars)
    throw std::invalid_argument("check_chow_weight_lower_bound: weight length mismatch");
  DimDeg dd = variety_dim_deg(ideal_y);
  if (subset.size() != static_cast<size_t>(dd.dim) + 1)
    throw std::invalid_argument("check_chow_weight_lower_bound: subset size must be dim + 1 = " +
                                std::to_string(dd.dim + 1));
  for (size_t j : subset)
    if (j >= ideal_y.num_vars)
      throw std::invalid_argument("check_chow_weight_lower_bound: subset index out of range");
  if (!is_projectively_empty(with_extra_gens(ideal_y, coordinate_forms(ideal_y.num_vars, subset))))
    throw std::domain_error("check_chow_weight_lower_bound: subset not in general position");

  ChowWeightResult e;
  if (auto exact = chow_weight_exact(ideal_y, c)) {
    e = exact->first;
  } else {
    e = chow_weight_estimate(ideal_y, c, static_cast<uint32_t>(dd.deg) + 2);
  }
  Rat bound(0);
  for (size_t j : subset) bound += c[j];
  bound *= dd.deg;

  ChowLowerBoundCheck out;
  out.exact = e.exact;
  out.holds = e.hi >= bound;
  out.certified = e.lo >= bound;
  out.slack = (e.exact ? e.lo : e.hi) - bound;
  return out;
}

bool bracket_weight_check(const std::vector<size_t>& subset_j, const WeightVector& c) {
  if (subset_j.empty()) throw std::invalid_argument("bracket_weight_check: empty subset");
  const size_t m = c.size() - 1;
  const size_t k1 = subset_j.size();
  for (size_t j : subset_j)
    if (j > m) throw std::invalid_argument("bracket_weight_check: index out of range");

  std::vector<std::vector<HomPoly>> mat(k1, std::vector<HomPoly>(k1, HomPoly(k1 * (m + 1), 1)));
  for (size_t i = 0; i < k1; ++i)
    for (size_t t = 0; t < k1; ++t) mat[i][t] = block_var(k1, m, i, subset_j[t]);
  ChowForm bracket;
  bracket.ambient_m = m;
  bracket.dim_n = k1 - 1;
  bracket.poly = poly_det(mat);

  Rat expected(0);
  for (size_t j : subset_j) expected += c[j];
  auto groups = chow_weight_decomposition(bracket, c);
  return groups.size() == 1 && groups.begin()->first == expected;
}

}  // namespace heightlab
