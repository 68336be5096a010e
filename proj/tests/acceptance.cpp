// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "heightlab/chow.hpp"
#include "heightlab/harness.hpp"
#include "heightlab/heights.hpp"
#include "heightlab/ideals.hpp"
#include "heightlab/position.hpp"
#include "heightlab/serialize.hpp"

using namespace heightlab;

namespace {

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void report(int number, const std::string& name, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s — %s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
              detail.c_str());
  if (!ok) ++failures;
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f s", s);
  return buf;
}

Rat random_rat(std::mt19937_64& rng, long limit) {
  std::uniform_int_distribution<long> num(-limit, limit);
  std::uniform_int_distribution<long> den(1, limit);
  long n = 0;
  while (n == 0) n = num(rng);
  return make_rat(n, den(rng));
}

HomPoly random_poly(std::mt19937_64& rng, size_t num_vars, uint32_t degree, long bound) {
  std::uniform_int_distribution<long> coef(-bound, bound);
  HomPoly p(num_vars, degree);
  while (p.is_zero()) {
    p = HomPoly(num_vars, degree);
    for (const Monomial& m : enumerate_monomials(num_vars, degree)) p.add_term(m, Rat(coef(rng)));
  }
  return p;
}

ProjPoint random_point(std::mt19937_64& rng, size_t num_vars, long bound) {
  std::uniform_int_distribution<long> coord(-bound, bound);
  while (true) {
    std::vector<Rat> coords;
    bool nonzero = false;
    for (size_t i = 0; i < num_vars; ++i) {
      long c = coord(rng);
      nonzero = nonzero || c != 0;
      coords.emplace_back(c);
    }
    if (nonzero) return ProjPoint(coords);
  }
}

WeightVector random_weights(std::mt19937_64& rng, size_t n) {
  std::uniform_int_distribution<long> num(0, 9);
  std::uniform_int_distribution<long> den(1, 4);
  std::vector<Rat> out;
  for (size_t i = 0; i < n; ++i) out.push_back(make_rat(num(rng), den(rng)));
  return WeightVector(std::move(out));
}

PolyIdeal conic_ideal() { return make_ideal(3, {parse_poly("x0*x2 - x1^2", 3)}); }
PolyIdeal point_ideal_p1() { return make_ideal(2, {parse_poly("x1", 2)}); }

// --- criterion 1 -----------------------------------------------------------

void criterion_product_formula() {
  Timer timer;
  std::mt19937_64 rng(2024);
  int ok = 0;
  for (int i = 0; i < 1000; ++i)
    if (product_formula_check(random_rat(rng, 1000000)) == Rat(1)) ++ok;
  double t = timer.seconds();
  report(1, "product formula", ok == 1000 && t < 1.0,
         std::to_string(ok) + "/1000 exact products equal 1 (" + fmt_seconds(t) + ", limit 1 s)");
}

// --- criterion 2 -----------------------------------------------------------

void criterion_global_weil() {
  Timer timer;
  std::mt19937_64 rng(2025);
  int ok = 0, done = 0;
  while (done < 500) {
    size_t nvars = 2 + static_cast<size_t>(rng() % 3);  // m in {1,2,3}
    uint32_t d = 1 + static_cast<uint32_t>(rng() % 3);
    HomPoly q = random_poly(rng, nvars, d, 9);
    ProjPoint x = random_point(rng, nvars, 9);
    if (q.evaluate(x) == 0) continue;
    WeilIdentity id = global_weil_identity(q, x);
    if (id.lhs_product == id.rhs_product) ++ok;
    ++done;
  }
  double t = timer.seconds();
  report(2, "global Weil identity", ok == 500 && t < 10.0,
         std::to_string(ok) + "/500 exact norm-product equalities (" + fmt_seconds(t) +
             ", limit 10 s)");
}

// --- criterion 3 -----------------------------------------------------------

long hilbert_rank_oracle(const PolyIdeal& ideal, uint32_t u) {
  std::vector<Monomial> cols = enumerate_monomials(ideal.num_vars, u);
  std::map<Monomial, size_t, MonomialLexGreater> col_index;
  for (size_t i = 0; i < cols.size(); ++i) col_index.emplace(cols[i], i);
  std::vector<std::vector<Rat>> rows;
  for (const HomPoly& g : ideal.gens) {
    if (g.degree() > u) continue;
    for (const Monomial& m : enumerate_monomials(ideal.num_vars, u - g.degree())) {
      std::vector<Rat> row(cols.size(), Rat(0));
      for (const auto& [mon, coef] : g.terms()) row[col_index.at(m * mon)] = coef;
      rows.push_back(std::move(row));
    }
  }
  size_t rank = 0;
  for (size_t col = 0; col < cols.size() && rank < rows.size(); ++col) {
    size_t sel = rank;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    for (size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      Rat f = rows[r][col] / rows[rank][col];
      for (size_t k = col; k < cols.size(); ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return static_cast<long>(cols.size()) - static_cast<long>(rank);
}

void criterion_hilbert_oracle() {
  Timer timer;
  PolyIdeal p2 = make_ideal(3, {});
  PolyIdeal conic = conic_ideal();
  std::vector<HomPoly> phi{parse_poly("x0^3", 2), parse_poly("x0^2*x1", 2),
                           parse_poly("x0*x1^2", 2), parse_poly("x1^3", 2)};
  PolyIdeal cubic = image_ideal(make_ideal(2, {}), phi);
  PolyIdeal point = point_ideal_p1();

  bool agree = true;
  for (const PolyIdeal* ideal : {&p2, &conic, &cubic, &point}) {
    GroebnerBasis gb = groebner(*ideal);
    for (uint32_t u = 0; u <= 6; ++u)
      agree = agree && hilbert_function(gb, u) == hilbert_rank_oracle(*ideal, u);
  }
  DimDeg d1 = variety_dim_deg(p2), d2 = variety_dim_deg(conic), d3 = variety_dim_deg(cubic),
         d4 = variety_dim_deg(point);
  bool dims = d1.dim == 2 && d1.deg == 1 && d2.dim == 1 && d2.deg == 2 && d3.dim == 1 &&
              d3.deg == 3 && d4.dim == 0 && d4.deg == 1;
  std::ostringstream detail;
  detail << "rank-oracle agreement u<=6 " << (agree ? "ok" : "FAILED") << "; (dim,deg) = (" << d1.dim
         << "," << d1.deg << "),(" << d2.dim << "," << d2.deg << "),(" << d3.dim << "," << d3.deg
         << "),(" << d4.dim << "," << d4.deg << ") (" << fmt_seconds(timer.seconds()) << ")";
  report(3, "Hilbert function oracle", agree && dims, detail.str());
}

// --- criterion 4 -----------------------------------------------------------

Rat hilbert_weight_exhaustive(const GroebnerBasis& gb, uint32_t u, const WeightVector& c) {
  std::vector<Monomial> standard = quotient_basis(gb, u);
  const size_t dim = standard.size();
  std::map<Monomial, size_t, MonomialLexGreater> col;
  for (size_t i = 0; i < dim; ++i) col.emplace(standard[i], i);
  std::vector<Monomial> mons = enumerate_monomials(gb.num_vars, u);
  std::vector<std::vector<Rat>> residues;
  for (const Monomial& m : mons) {
    HomPoly nf = normal_form(HomPoly::single(gb.num_vars, m, Rat(1)), gb);
    std::vector<Rat> v(dim, Rat(0));
    for (const auto& [mon, coef] : nf.terms()) v[col.at(mon)] = coef;
    residues.push_back(std::move(v));
  }
  auto full_rank = [&](const std::vector<size_t>& subset) {
    std::vector<std::vector<Rat>> rows;
    for (size_t idx : subset) rows.push_back(residues[idx]);
    size_t rank = 0;
    for (size_t c2 = 0; c2 < dim && rank < rows.size(); ++c2) {
      size_t sel = rank;
      while (sel < rows.size() && rows[sel][c2] == 0) ++sel;
      if (sel == rows.size()) continue;
      std::swap(rows[rank], rows[sel]);
      for (size_t r = rank + 1; r < rows.size(); ++r) {
        if (rows[r][c2] == 0) continue;
        Rat f = rows[r][c2] / rows[rank][c2];
        for (size_t k = c2; k < dim; ++k) rows[r][k] -= f * rows[rank][k];
      }
      ++rank;
    }
    return rank == dim;
  };
  Rat best(0);
  bool found = false;
  std::vector<size_t> subset(dim);
  auto rec = [&](auto&& self, size_t pos, size_t next) -> void {
    if (pos == dim) {
      if (!full_rank(subset)) return;
      Rat total(0);
      for (size_t idx : subset) total += c.weight_of(mons[idx]);
      if (!found || total > best) best = total;
      found = true;
      return;
    }
    for (size_t i = next; i < mons.size(); ++i) {
      subset[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  return found ? best : Rat(-1);
}

void criterion_hilbert_weight() {
  Timer timer;
  std::mt19937_64 rng(2026);
  struct Case {
    PolyIdeal ideal;
    uint32_t max_u;
  };
  std::vector<Case> cases;
  cases.push_back({make_ideal(2, {}), 3});
  cases.push_back({conic_ideal(), 3});
  cases.push_back({point_ideal_p1(), 4});
  long checked = 0, matched = 0;
  for (const Case& cs : cases) {
    GroebnerBasis gb = groebner(cs.ideal);
    for (uint32_t u = 1; u <= cs.max_u; ++u) {
      for (int rep = 0; rep < 20; ++rep) {
        WeightVector c = random_weights(rng, cs.ideal.num_vars);
        ++checked;
        if (hilbert_weight(gb, u, c).value == hilbert_weight_exhaustive(gb, u, c)) ++matched;
      }
    }
  }
  double t = timer.seconds();
  report(4, "Hilbert weight optimality",
         checked == matched && t < 60.0,
         std::to_string(matched) + "/" + std::to_string(checked) +
             " greedy = exhaustive maximum (" + fmt_seconds(t) + ", limit 60 s)");
}

// --- criterion 5 -----------------------------------------------------------

Rat chow_specialization_oracle(const ChowForm& cf, const WeightVector& c, uint64_t seed) {
  Int den_lcm(1);
  for (const Rat& x : c.entries())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<long> scaled;
  for (const Rat& x : c.entries()) scaled.push_back(Rat(x * den_lcm).get_num().get_si());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> val(-20, 20);
  const size_t m1 = cf.ambient_m + 1;
  long best = -1;
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Rat> a;
    for (size_t i = 0; i < cf.poly.num_vars(); ++i) a.emplace_back(val(rng));
    std::map<long, Rat> univariate;
    for (const auto& [mon, coef] : cf.poly.terms()) {
      long tdeg = 0;
      Rat factor = coef;
      for (size_t idx = 0; idx < mon.num_vars(); ++idx) {
        if (mon.exp(idx) == 0) continue;
        tdeg += scaled[idx % m1] * static_cast<long>(mon.exp(idx));
        factor *= rat_pow(a[idx], mon.exp(idx));
      }
      univariate[tdeg] += factor;
    }
    for (auto it = univariate.rbegin(); it != univariate.rend(); ++it)
      if (it->second != 0) {
        best = std::max(best, it->first);
        break;
      }
  }
  return best < 0 ? Rat(-1) : Rat(best) / den_lcm;
}

void criterion_chow_weights() {
  Timer timer;
  std::mt19937_64 rng(2027);
  bool ok = true;
  std::ostringstream detail;

  WeightVector c31(std::vector<Rat>{Rat(3), Rat(1)});
  ChowForm point_form = chow_form_point(parse_point("(1:0)"));
  ok = ok && chow_weight(point_form, c31).lo == Rat(3);
  ok = ok && chow_specialization_oracle(point_form, c31, 1) == Rat(3);

  for (size_t m = 1; m <= 3; ++m) {
    std::vector<ProjPoint> span;
    for (size_t j = 0; j <= m; ++j) {
      std::vector<Rat> coords(m + 1, Rat(0));
      coords[j] = 1;
      span.emplace_back(coords);
    }
    ChowForm full = chow_form_linear(span, m);
    for (int rep = 0; rep < 5; ++rep) {
      WeightVector c = random_weights(rng, m + 1);
      Rat sum(0);
      for (const Rat& x : c.entries()) sum += x;
      ok = ok && chow_weight(full, c).lo == sum;
      ok = ok && chow_specialization_oracle(full, c, 100 + static_cast<uint64_t>(rep)) == sum;
    }
  }

  WeightVector c100(std::vector<Rat>{Rat(1), Rat(0), Rat(0)});
  ChowForm conic_form = chow_form_hypersurface(parse_poly("x0*x2 - x1^2", 3));
  ok = ok && chow_weight(conic_form, c100).lo == Rat(2);
  ok = ok && chow_specialization_oracle(conic_form, c100, 7) == Rat(2);

  ChowLowerBoundCheck l1 = check_chow_weight_lower_bound(point_ideal_p1(), c31, {0});
  ChowLowerBoundCheck l2 = check_chow_weight_lower_bound(conic_ideal(), c100, {0, 2});
  ChowLowerBoundCheck l3 =
      check_chow_weight_lower_bound(make_ideal(2, {}), WeightVector(std::vector<Rat>{Rat(1), Rat(1)}), {0, 1});
  ok = ok && l1.holds && l2.holds && l3.holds;
  detail << "lower-bound slacks " << rat_str(l1.slack) << "," << rat_str(l2.slack) << ","
         << rat_str(l3.slack);

  bool bound_ok = true;
  std::vector<PolyIdeal> ideals{point_ideal_p1(), make_ideal(2, {}), conic_ideal()};
  for (const PolyIdeal& ideal : ideals) {
    for (uint32_t u : {3u, 4u, 5u}) {
      for (int rep = 0; rep < 5; ++rep) {
        WeightVector c = random_weights(rng, ideal.num_vars);
        Rat e = chow_weight_exact(ideal, c)->first.lo;
        bound_ok = bound_ok &&
                   check_hilbert_weight_bound(ideal, c, u, e, BoundConvention::dimension).holds &&
                   check_hilbert_weight_bound(ideal, c, u, e, BoundConvention::ambient).holds;
      }
    }
  }
  ok = ok && bound_ok;
  detail << "; Hilbert-weight bound u in {3,4,5} both conventions "
         << (bound_ok ? "ok" : "FAILED") << " (" << fmt_seconds(timer.seconds()) << ")";
  report(5, "Chow weights", ok, detail.str());
}

// --- criterion 6 -----------------------------------------------------------

void criterion_position() {
  Timer timer;
  VarietySpec p2 = make_variety(make_ideal(3, {}));
  std::vector<HomPoly> general{parse_poly("x0", 3), parse_poly("x1", 3), parse_poly("x2", 3),
                               parse_poly("x0 + x1 + x2", 3)};
  std::vector<HomPoly> skew{parse_poly("x0", 3), parse_poly("x1", 3), parse_poly("x0 + x1", 3),
                            parse_poly("x2", 3)};
  bool verdicts = check_subgeneral(p2, general, 2).holds;
  PositionReport fail2 = check_subgeneral(p2, skew, 2);
  verdicts = verdicts && !fail2.holds && fail2.witness.has_value() &&
             *fail2.witness == std::vector<size_t>{0, 1, 2};
  verdicts = verdicts && check_subgeneral(p2, skew, 3).holds;

  bool replaced = true;
  int max_attempts = 0;
  for (uint64_t seed = 0; seed < 10; ++seed) {
    ReplacementResult rep = replace_hypersurfaces(p2, skew, seed);
    max_attempts = std::max(max_attempts, rep.attempts);
    replaced = replaced && rep.attempts <= 200 && rep.polys.size() == 3 && rep.polys[0] == skew[0] &&
               is_projectively_empty(with_extra_gens(p2.ideal, rep.polys));
  }
  std::ostringstream detail;
  detail << "verdicts " << (verdicts ? "ok" : "FAILED") << "; replacements verified for seeds 0..9, max attempts "
         << max_attempts << " (" << fmt_seconds(timer.seconds()) << ")";
  report(6, "position and replacement", verdicts && replaced, detail.str());
}

// --- criteria 7 and 8 ------------------------------------------------------

std::string csv_string(const VerificationReport& report) {
  std::ostringstream out;
  write_csv(out, report);
  return out.str();
}

void criterion_main_check_and_determinism() {
  Timer timer;
  ExperimentConfig cfg = config_from_json(read_file(std::string(HEIGHTLAB_FIXTURES_DIR) + "/lines4.json"));
  cfg.height_bound = 50;

  ExperimentConfig cfg25 = cfg;
  cfg25.height_bound = 25;
  VerificationReport rep25 = run_verification(cfg25);
  VerificationReport rep50 = run_verification(cfg);

  bool coeff_ok = rep50.summary.coefficient == 6;

  std::set<std::string> v25, v50;
  for (const ProjPoint& p : rep25.summary.violators) v25.insert(p.str());
  for (const ProjPoint& p : rep50.summary.violators) v50.insert(p.str());
  bool stable = v25 == v50 && rep50.summary.stable_from_h <= 25;

  double max_ratio_nonviolators = 0.0;
  for (const VerificationRecord& rec : rep50.records) {
    if (rec.excluded || rec.h <= 0 || rec.margin < 0) continue;
    max_ratio_nonviolators = std::max(max_ratio_nonviolators, rec.lhs / rec.h);
  }
  bool ratio_ok = max_ratio_nonviolators <= 6.1;

  bool order_ok = true;
  for (const CompareRow& row : compare_bounds(cfg)) {
    if (row.margins[0] > row.margins[4] + 1e-12) order_ok = false;  // main vs theoremE
  }

  double t = timer.seconds();
  bool time_ok = t < 300.0;
  std::ostringstream detail;
  detail << rep50.summary.points << " points, " << rep50.summary.excluded << " excluded, "
         << rep50.summary.violations << " violations (stable from H=" << rep50.summary.stable_from_h
         << "); max lhs/h over non-violators " << format_real(max_ratio_nonviolators)
         << " <= 6.1; margin order main<=theoremE " << (order_ok ? "ok" : "FAILED") << " ("
         << fmt_seconds(t) << ", limit 300 s)";
  report(7, "empirical height-inequality check", coeff_ok && stable && ratio_ok && order_ok && time_ok,
         detail.str());

  // criterion 8: byte-identical reruns of criteria 6 and 7
  Timer timer8;
  std::ostringstream repl_a, repl_b;
  VarietySpec p2 = make_variety(make_ideal(3, {}));
  std::vector<HomPoly> skew{parse_poly("x0", 3), parse_poly("x1", 3), parse_poly("x0 + x1", 3),
                            parse_poly("x2", 3)};
  for (uint64_t seed = 0; seed < 10; ++seed) {
    for (auto* out : {&repl_a, &repl_b}) {
      ReplacementResult rep = replace_hypersurfaces(p2, skew, seed);
      *out << rep.attempts;
      for (const HomPoly& p : rep.polys) *out << "|" << p.str();
      for (const auto& row : rep.coeffs)
        for (const Rat& r : row) *out << "," << rat_str(r);
      *out << "\n";
    }
  }
  bool replace_deterministic = repl_a.str() == repl_b.str();

  VerificationReport rep50_again = run_verification(cfg);
  bool csv_deterministic = csv_string(rep50) == csv_string(rep50_again) &&
                           summary_json(rep50.summary) == summary_json(rep50_again.summary);
  report(8, "determinism",
         replace_deterministic && csv_deterministic,
         std::string("replacement output ") + (replace_deterministic ? "identical" : "DIFFERS") +
             ", verification CSV " + (csv_deterministic ? "byte-identical" : "DIFFERS") + " (" +
             fmt_seconds(timer8.seconds()) + ")");
}

}  // namespace

int main() {
  criterion_product_formula();
  criterion_global_weil();
  criterion_hilbert_oracle();
  criterion_hilbert_weight();
  criterion_chow_weights();
  criterion_position();
  criterion_main_check_and_determinism();
  if (failures == 0)
    std::printf("all acceptance criteria passed\n");
  else
    std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
