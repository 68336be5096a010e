#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "heightlab/heights.hpp"
#include "heightlab/ideals.hpp"
#include "heightlab/polyring.hpp"
#include "heightlab/position.hpp"
#include "heightlab/qarith.hpp"

namespace heightlab {

// Right-hand-side presets: `main` is (N-n+1)(n+1); the others are the
// comparison bounds n+1 (B), 2N-n+1 (C, linear forms), n+1 (D) and N(n+1)
// (E), all plus epsilon.
enum class BoundMode { main, theoremB, theoremC, theoremD, theoremE };

std::string bound_mode_str(BoundMode mode);
BoundMode parse_bound_mode(std::string_view s);
long bound_coefficient(BoundMode mode, int n_position, int dim);

struct ExperimentConfig {
  VarietySpec variety;
  std::vector<HomPoly> polys;
  PlaceSet places;
  int n_position = 0;  // N
  Rat epsilon;
  long height_bound = 1;  // points with coordinates bounded by this H
  BoundMode mode = BoundMode::main;
};

// Checks epsilon > 0, infinity in S, and the subgeneral position hypothesis.
void validate_config(const ExperimentConfig& cfg);

// All points of P^m(Q) on V with coprime integer coordinates of absolute
// value <= H (so h(x) <= log H), canonical and lexicographically sorted.
std::vector<ProjPoint> enumerate_points(const VarietySpec& variety, long height_bound);

// Indices ordered by ||Q_i(x)||_v ascending, ties by original index.
std::vector<size_t> sort_permutation(const std::vector<HomPoly>& qs, const Place& v,
                                     const ProjPoint& x);

// Per-polynomial local weights log(||x||_v^d ||P_j||_v / ||P_j(x)||_v) for
// one realized place and point, with the exact ratios the logs come from.
struct WeilWeights {
  std::vector<Rat> ratios;
  std::vector<double> logs;
};
WeilWeights weight_vector(const std::vector<HomPoly>& ps, const Place& v, const ProjPoint& x);

// The two sides of the replacement comparison at one place: the full chain
// log prod_i ||x||^d/||Q_i(x)|| against (N-n+1) log of the corresponding
// (n+1)-fold product over the replacement family. Their difference is
// bounded by a constant independent of x.
struct ProximityTerms {
  double chain_total = 0.0;
  double replaced_scaled = 0.0;
};
ProximityTerms replacement_proximity(const VarietySpec& variety, const std::vector<HomPoly>& qs,
                                     const ReplacementResult& replacement, int n_position,
                                     const Place& v, const ProjPoint& x);

// chain - replaced over all enumerated points off the divisors, with the
// replacement family recomputed per sorted prefix (cached). Used to watch
// the running maximum of the difference stabilize.
struct GapScan {
  std::vector<double> gaps;  // lex point order
  double max_gap = 0.0;
};
GapScan proximity_gap_scan(const VarietySpec& variety, const std::vector<HomPoly>& qs,
                           int n_position, const Place& v, long height_bound, uint64_t seed);

struct VerificationRecord {
  ProjPoint point;
  double h = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool excluded = false;
};

struct VerificationSummary {
  long points = 0;
  long excluded = 0;
  long violations = 0;
  double max_ratio = 0.0;  // max of lhs/h over points with h > 0
  long stable_from_h = 1;  // smallest H' with all violators inside height H'
  std::vector<ProjPoint> violators;
  long coefficient = 0;
  BoundMode mode = BoundMode::main;
  Rat epsilon;
};

struct VerificationReport {
  std::vector<VerificationRecord> records;  // lex point order
  VerificationSummary summary;
};

// For every enumerated point off all divisors: lhs = sum_{v in S} sum_j
// lambda_{Q_j,v}(x)/deg Q_j, rhs = (coefficient + epsilon) h(x).
VerificationReport run_verification(const ExperimentConfig& cfg, int threads = 1);

// CSV columns: point,h,lhs,mode,coefficient,rhs,margin,excluded.
void write_csv(std::ostream& out, const VerificationReport& report);

// {"violations": ..., "max_ratio": ..., "stable_from_H": ..., "violators": [...]}
std::string summary_json(const VerificationSummary& summary);

// Margins under all five presets side by side.
struct CompareRow {
  ProjPoint point;
  double h = 0.0;
  double lhs = 0.0;
  double margins[5];
};
std::vector<CompareRow> compare_bounds(const ExperimentConfig& cfg, int threads = 1);
void write_compare_csv(std::ostream& out, const std::vector<CompareRow>& rows);

}  // namespace heightlab
