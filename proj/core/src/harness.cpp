#include "heightlab/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace heightlab {

std::string bound_mode_str(BoundMode mode) {
  switch (mode) {
    case BoundMode::main:
      return "main";
    case BoundMode::theoremB:
      return "theoremB";
    case BoundMode::theoremC:
      return "theoremC";
    case BoundMode::theoremD:
      return "theoremD";
    case BoundMode::theoremE:
      return "theoremE";
  }
  return "?";
}

BoundMode parse_bound_mode(std::string_view s) {
  if (s == "main") return BoundMode::main;
  if (s == "theoremB") return BoundMode::theoremB;
  if (s == "theoremC") return BoundMode::theoremC;
  if (s == "theoremD") return BoundMode::theoremD;
  if (s == "theoremE") return BoundMode::theoremE;
  throw std::invalid_argument("unknown bound mode '" + std::string(s) + "'");
}

long bound_coefficient(BoundMode mode, int n_position, int dim) {
  const long n_pos = n_position, n = dim;
  switch (mode) {
    case BoundMode::main:
      return (n_pos - n + 1) * (n + 1);
    case BoundMode::theoremB:
    case BoundMode::theoremD:
      return n + 1;
    case BoundMode::theoremC:
      return 2 * n_pos - n + 1;
    case BoundMode::theoremE:
      return n_pos * (n + 1);
  }
  return 0;
}

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.epsilon <= 0) throw std::invalid_argument("config: epsilon must be positive");
  if (cfg.height_bound < 1) throw std::invalid_argument("config: height bound must be >= 1");
  if (cfg.places.empty() || !cfg.places.front().is_infinite())
    throw std::invalid_argument("config: place set must contain the archimedean place");
  PositionReport pos = check_subgeneral(cfg.variety, cfg.polys, cfg.n_position);
  if (!pos.holds) {
    std::string witness;
    for (size_t idx : *pos.witness) witness += " Q" + std::to_string(idx + 1);
    throw std::invalid_argument("config: family is not in " + std::to_string(cfg.n_position) +
                                "-subgeneral position; witness subset:" + witness);
  }
}

namespace {

// Visit canonical tuples (coprime, first nonzero coordinate positive) with
// entries bounded by H that lie on V.
void visit_points(const VarietySpec& variety, long height_bound,
                  const std::function<void(const ProjPoint&)>& fn) {
  const size_t nvars = variety.ideal.num_vars;
  std::vector<long> tuple(nvars, 0);
  std::vector<Rat> coords(nvars);
  auto rec = [&](auto&& self, size_t i, bool lead_seen, long g) -> void {
    if (i == nvars) {
      if (!lead_seen || g != 1) return;
      for (size_t k = 0; k < nvars; ++k) coords[k] = Rat(tuple[k]);
      for (const HomPoly& gen : variety.ideal.gens)
        if (gen.evaluate(coords) != 0) return;
      std::vector<Int> ints;
      ints.reserve(nvars);
      for (long v : tuple) ints.emplace_back(v);
      fn(ProjPoint::from_ints(std::move(ints)));
      return;
    }
    long lo = lead_seen ? -height_bound : 0;  // first nonzero entry positive
    for (long v = lo; v <= height_bound; ++v) {
      tuple[i] = v;
      self(self, i + 1, lead_seen || v != 0, std::gcd(g, std::abs(v)));
    }
  };
  rec(rec, 0, false, 0);
}

}  // namespace

std::vector<ProjPoint> enumerate_points(const VarietySpec& variety, long height_bound) {
  if (height_bound < 1) throw std::invalid_argument("enumerate_points: height bound must be >= 1");
  std::vector<ProjPoint> out;
  visit_points(variety, height_bound, [&](const ProjPoint& p) { out.push_back(p); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<size_t> sort_permutation(const std::vector<HomPoly>& qs, const Place& v,
                                     const ProjPoint& x) {
  std::vector<Rat> norms;
  norms.reserve(qs.size());
  for (const HomPoly& q : qs) norms.push_back(norm(q.evaluate(x), v));
  std::vector<size_t> idx(qs.size());
  std::iota(idx.begin(), idx.end(), size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return norms[a] < norms[b]; });
  return idx;
}

WeilWeights weight_vector(const std::vector<HomPoly>& ps, const Place& v, const ProjPoint& x) {
  WeilWeights out;
  out.ratios.reserve(ps.size());
  out.logs.reserve(ps.size());
  for (const HomPoly& p : ps) {
    Rat r = weil_ratio(p, v, x);
    out.logs.push_back(log_rat(r));
    out.ratios.push_back(std::move(r));
  }
  return out;
}

ProximityTerms replacement_proximity(const VarietySpec& variety, const std::vector<HomPoly>& qs,
                                     const ReplacementResult& replacement, int n_position,
                                     const Place& v, const ProjPoint& x) {
  if (qs.empty()) throw std::invalid_argument("replacement_proximity: empty family");
  const uint32_t d = qs.front().degree();
  for (const HomPoly& q : qs)
    if (q.degree() != d)
      throw std::invalid_argument("replacement_proximity: family must share one degree");
  const int n = variety.dim;
  const double log_pn = log_rat(point_norm(x, v));

  double chain = 0.0;
  for (const HomPoly& q : qs) {
    Rat val = q.evaluate(x);
    if (val == 0) throw std::domain_error("replacement_proximity: point lies on a divisor");
    chain += static_cast<double>(d) * log_pn - log_rat(norm(val, v));
  }
  double replaced = static_cast<double>(n + 1) * static_cast<double>(d) * log_pn;
  for (const HomPoly& p : replacement.polys) {
    Rat val = p.evaluate(x);
    if (val == 0) throw std::domain_error("replacement_proximity: point lies on a replacement divisor");
    replaced -= log_rat(norm(val, v));
  }
  return ProximityTerms{chain, static_cast<double>(n_position - n + 1) * replaced};
}

GapScan proximity_gap_scan(const VarietySpec& variety, const std::vector<HomPoly>& qs,
                           int n_position, const Place& v, long height_bound, uint64_t seed) {
  const size_t take = static_cast<size_t>(n_position) + 1;
  if (qs.size() < take) throw std::invalid_argument("proximity_gap_scan: need at least N+1 polynomials");
  std::map<std::vector<size_t>, ReplacementResult> cache;
  GapScan out;
  bool any = false;
  for (const ProjPoint& x : enumerate_points(variety, height_bound)) {
    bool on_divisor = false;
    for (const HomPoly& q : qs)
      if (q.evaluate(x) == 0) on_divisor = true;
    if (on_divisor) continue;
    std::vector<size_t> perm = sort_permutation(qs, v, x);
    perm.resize(take);
    auto it = cache.find(perm);
    if (it == cache.end()) {
      std::vector<HomPoly> family;
      family.reserve(take);
      for (size_t idx : perm) family.push_back(qs[idx]);
      it = cache.emplace(perm, replace_hypersurfaces(variety, family, seed)).first;
    }
    // a replacement combination may vanish at x even though the family has
    // no common zero on V; those points fall outside the comparison
    bool on_replacement = false;
    for (const HomPoly& p : it->second.polys)
      if (p.evaluate(x) == 0) on_replacement = true;
    if (on_replacement) continue;
    ProximityTerms terms = replacement_proximity(variety, qs, it->second, n_position, v, x);
    double gap = terms.chain_total - terms.replaced_scaled;
    if (!any || gap > out.max_gap) out.max_gap = gap;
    any = true;
    out.gaps.push_back(gap);
  }
  return out;
}

namespace {

struct LocalData {
  // per place: log ||x||_v is recomputed per point; per (poly, place) the
  // log of the coefficient norm is fixed and cached here
  std::vector<std::vector<double>> log_poly_norm;  // [place][poly]
  std::vector<uint32_t> degrees;
};

LocalData precompute(const ExperimentConfig& cfg) {
  LocalData data;
  data.log_poly_norm.resize(cfg.places.size());
  for (size_t vi = 0; vi < cfg.places.size(); ++vi) {
    data.log_poly_norm[vi].reserve(cfg.polys.size());
    for (const HomPoly& q : cfg.polys)
      data.log_poly_norm[vi].push_back(log_rat(poly_norm(q, cfg.places[vi])));
  }
  for (const HomPoly& q : cfg.polys) data.degrees.push_back(q.degree());
  return data;
}

// lhs = sum_v sum_j lambda_{Q_j,v}(x) / deg Q_j; NaN marks exclusion.
double point_lhs(const ExperimentConfig& cfg, const LocalData& data, const ProjPoint& x) {
  std::vector<Rat> values;
  values.reserve(cfg.polys.size());
  for (const HomPoly& q : cfg.polys) {
    Rat val = q.evaluate(x);
    if (val == 0) return std::numeric_limits<double>::quiet_NaN();
    values.push_back(std::move(val));
  }
  double lhs = 0.0;
  for (size_t vi = 0; vi < cfg.places.size(); ++vi) {
    const Place& v = cfg.places[vi];
    const double log_pn = log_rat(point_norm(x, v));
    for (size_t j = 0; j < cfg.polys.size(); ++j) {
      const double lambda = static_cast<double>(data.degrees[j]) * log_pn +
                            data.log_poly_norm[vi][j] - log_rat(norm(values[j], v));
      lhs += lambda / static_cast<double>(data.degrees[j]);
    }
  }
  return lhs;
}

void parallel_over(size_t count, int threads, const std::function<void(size_t)>& fn) {
  if (threads <= 1 || count < 2) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const size_t workers = std::min<size_t>(static_cast<size_t>(threads), count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (size_t i = w; i < count; i += workers) fn(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace

VerificationReport run_verification(const ExperimentConfig& cfg, int threads) {
  validate_config(cfg);
  const int dim = cfg.variety.dim;
  const long coeff = bound_coefficient(cfg.mode, cfg.n_position, dim);
  const double slope = static_cast<double>(coeff) + cfg.epsilon.get_d();
  const LocalData data = precompute(cfg);

  std::vector<ProjPoint> points = enumerate_points(cfg.variety, cfg.height_bound);
  VerificationReport report;
  report.records.resize(points.size(), VerificationRecord{ProjPoint::from_ints({Int(1)}), 0, 0, 0, 0, false});

  parallel_over(points.size(), threads, [&](size_t i) {
    const ProjPoint& x = points[i];
    VerificationRecord rec{x, height_point(x).log_value, 0, 0, 0, false};
    double lhs = point_lhs(cfg, data, x);
    if (std::isnan(lhs)) {
      rec.excluded = true;
      rec.lhs = rec.rhs = rec.margin = std::numeric_limits<double>::quiet_NaN();
    } else {
      rec.lhs = lhs;
      rec.rhs = slope * rec.h;
      rec.margin = rec.rhs - rec.lhs;
    }
    report.records[i] = std::move(rec);
  });

  VerificationSummary& s = report.summary;
  s.points = static_cast<long>(points.size());
  s.coefficient = coeff;
  s.mode = cfg.mode;
  s.epsilon = cfg.epsilon;
  long stable = 1;
  for (const VerificationRecord& rec : report.records) {
    if (rec.excluded) {
      ++s.excluded;
      continue;
    }
    if (rec.h > 0) s.max_ratio = std::max(s.max_ratio, rec.lhs / rec.h);
    if (rec.margin < 0) {
      ++s.violations;
      s.violators.push_back(rec.point);
      for (const Int& c : rec.point.coords()) {
        Int a = abs(c);
        if (a > stable) stable = a.get_si();
      }
    }
  }
  s.stable_from_h = stable;
  return report;
}

void write_csv(std::ostream& out, const VerificationReport& report) {
  out << "point,h,lhs,mode,coefficient,rhs,margin,excluded\n";
  const std::string mode = bound_mode_str(report.summary.mode);
  for (const VerificationRecord& rec : report.records) {
    out << rec.point.str() << "," << format_real(rec.h) << ",";
    if (rec.excluded) {
      out << "," << mode << "," << report.summary.coefficient << ",,,1\n";
    } else {
      out << format_real(rec.lhs) << "," << mode << "," << report.summary.coefficient << ","
          << format_real(rec.rhs) << "," << format_real(rec.margin) << ",0\n";
    }
  }
}

std::string summary_json(const VerificationSummary& summary) {
  std::string out = "{";
  out += "\"violations\": " + std::to_string(summary.violations);
  out += ", \"max_ratio\": " + format_real(summary.max_ratio);
  out += ", \"stable_from_H\": " + std::to_string(summary.stable_from_h);
  out += ", \"violators\": [";
  for (size_t i = 0; i < summary.violators.size(); ++i) {
    if (i) out += ", ";
    out += "\"" + summary.violators[i].str() + "\"";
  }
  out += "]}";
  return out;
}

std::vector<CompareRow> compare_bounds(const ExperimentConfig& cfg, int threads) {
  validate_config(cfg);
  const int dim = cfg.variety.dim;
  const double eps = cfg.epsilon.get_d();
  const LocalData data = precompute(cfg);
  const BoundMode modes[5] = {BoundMode::main, BoundMode::theoremB, BoundMode::theoremC,
                              BoundMode::theoremD, BoundMode::theoremE};

  std::vector<ProjPoint> points = enumerate_points(cfg.variety, cfg.height_bound);
  std::vector<CompareRow> rows(points.size(),
                               CompareRow{ProjPoint::from_ints({Int(1)}), 0, 0, {0, 0, 0, 0, 0}});
  std::vector<char> keep(points.size(), 0);
  parallel_over(points.size(), threads, [&](size_t i) {
    const ProjPoint& x = points[i];
    double lhs = point_lhs(cfg, data, x);
    if (std::isnan(lhs)) return;
    CompareRow row{x, height_point(x).log_value, lhs, {0, 0, 0, 0, 0}};
    for (int k = 0; k < 5; ++k) {
      const long coeff = bound_coefficient(modes[k], cfg.n_position, dim);
      row.margins[k] = (static_cast<double>(coeff) + eps) * row.h - lhs;
    }
    rows[i] = std::move(row);
    keep[i] = 1;
  });
  std::vector<CompareRow> out;
  out.reserve(rows.size());
  for (size_t i = 0; i < rows.size(); ++i)
    if (keep[i]) out.push_back(std::move(rows[i]));
  return out;
}

void write_compare_csv(std::ostream& out, const std::vector<CompareRow>& rows) {
  out << "point,h,lhs,margin_main,margin_theoremB,margin_theoremC,margin_theoremD,margin_theoremE\n";
  for (const CompareRow& row : rows) {
    out << row.point.str() << "," << format_real(row.h) << "," << format_real(row.lhs);
    for (int k = 0; k < 5; ++k) out << "," << format_real(row.margins[k]);
    out << "\n";
  }
}

}  // namespace heightlab
