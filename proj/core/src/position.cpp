#include "heightlab/position.hpp"

#include <random>

namespace heightlab {

PositionReport check_subgeneral(const VarietySpec& variety, const std::vector<HomPoly>& qs,
                                int n_position) {
  const long q = static_cast<long>(qs.size());
  if (n_position + 1 < variety.dim + 1)
    throw std::invalid_argument("check_subgeneral: N must be at least dim V");
  if (q < n_position + 1)
    throw std::invalid_argument("check_subgeneral: need at least N+1 polynomials");
  for (const HomPoly& p : qs)
    if (p.is_zero() || p.num_vars() != variety.ideal.num_vars)
      throw std::invalid_argument("check_subgeneral: bad polynomial in family");

  PositionReport report;
  report.n_tested = n_position;
  report.holds = true;

  const size_t take = static_cast<size_t>(n_position) + 1;
  std::vector<size_t> subset(take);
  auto rec = [&](auto&& self, size_t pos, size_t next) -> bool {
    if (pos == take) {
      std::vector<HomPoly> extra;
      extra.reserve(take);
      for (size_t idx : subset) extra.push_back(qs[idx]);
      if (!is_projectively_empty(with_extra_gens(variety.ideal, extra))) {
        report.holds = false;
        report.witness = subset;
        return true;  // first failing subset in lexicographic order
      }
      return false;
    }
    for (size_t idx = next; idx < qs.size(); ++idx) {
      subset[pos] = idx;
      if (self(self, pos + 1, idx + 1)) return true;
    }
    return false;
  };
  rec(rec, 0, 0);
  return report;
}

namespace {

constexpr int kMaxAttempts = 200;
constexpr int kDoubleEvery = 25;

}  // namespace

ReplacementResult replace_hypersurfaces(const VarietySpec& variety, const std::vector<HomPoly>& qs,
                                        uint64_t seed) {
  const int n = variety.dim;
  const int n_position = static_cast<int>(qs.size()) - 1;  // family has N+1 members
  if (n_position < n)
    throw std::invalid_argument("replace_hypersurfaces: need at least dim V + 1 polynomials");
  uint32_t d = 0;
  for (const HomPoly& p : qs) {
    if (p.is_zero() || p.num_vars() != variety.ideal.num_vars)
      throw std::invalid_argument("replace_hypersurfaces: bad polynomial in family");
    if (d == 0) d = p.degree();
    if (p.degree() != d || d == 0)
      throw std::invalid_argument("replace_hypersurfaces: polynomials must share one degree >= 1");
  }
  if (!is_projectively_empty(with_extra_gens(variety.ideal, qs)))
    throw std::invalid_argument("replace_hypersurfaces: input not in position");

  std::mt19937_64 rng(seed);
  auto draw_nonzero = [&](long bound) {
    std::uniform_int_distribution<long> dist(1, 2 * bound);
    long k = dist(rng);
    return k <= bound ? k : bound - k;  // uniform on {-B..B} minus zero
  };

  const size_t nvars = variety.ideal.num_vars;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const long bound = 1L << (attempt / kDoubleEvery);
    std::vector<std::vector<Rat>> coeffs;
    std::vector<HomPoly> polys{qs[0]};
    for (int t = 2; t <= n + 1; ++t) {
      const int hi = n_position - n + t;  // paper-style upper summation index
      std::vector<Rat> row;
      HomPoly p(nvars, d);
      for (int j = 2; j <= hi; ++j) {
        Rat c;
        if (attempt == 0)
          c = (j == hi) ? Rat(1) : Rat(0);  // structured first try
        else
          c = Rat(draw_nonzero(bound));
        row.push_back(c);
        if (c != 0) p = p + qs[static_cast<size_t>(j) - 1] * c;
      }
      coeffs.push_back(std::move(row));
      polys.push_back(std::move(p));
    }
    bool degenerate = false;
    for (const HomPoly& p : polys)
      if (p.is_zero()) degenerate = true;
    if (!degenerate && is_projectively_empty(with_extra_gens(variety.ideal, polys)))
      return ReplacementResult{std::move(polys), std::move(coeffs), attempt + 1};
  }
  throw ReplacementBudgetExhausted("replace_hypersurfaces: no replacement found within attempt budget (" +
                                   std::to_string(kMaxAttempts) + " attempts)");
}

}  // namespace heightlab
