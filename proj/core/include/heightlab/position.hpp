#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "heightlab/ideals.hpp"
#include "heightlab/polyring.hpp"

namespace heightlab {

// Verdict of the N-subgeneral position test; when it fails, `witness` is the
// first (N+1)-subset (lexicographic, 0-based indices) whose common zero set
// meets V.
struct PositionReport {
  int n_tested = 0;
  bool holds = false;
  std::optional<std::vector<size_t>> witness;
};

// Every (N+1)-subset of the family must cut V to the empty set over the
// algebraic closure. Requires q >= N+1 >= dim V + 1.
PositionReport check_subgeneral(const VarietySpec& variety, const std::vector<HomPoly>& qs, int n_position);

// Thrown when the randomized coefficient search runs out of attempts; says
// nothing about nonexistence.
struct ReplacementBudgetExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// P_1 = Q_1 and P_t = sum_{j=2..N-n+t} c_{tj} Q_j with integer coefficients,
// such that the P's cut V to the empty set (verified). coeffs[t-2][j-2]
// holds c_{tj}.
struct ReplacementResult {
  std::vector<HomPoly> polys;            // n+1 entries
  std::vector<std::vector<Rat>> coeffs;  // triangular, rows t = 2..n+1
  int attempts = 0;
};

// Deterministic seeded search: the structured choice P_t = Q_{N-n+t} first,
// then random nonzero coefficients in {-B..B} with B doubling every 25
// attempts, at most 200 attempts. Inputs must share one degree and cut V to
// the empty set.
ReplacementResult replace_hypersurfaces(const VarietySpec& variety, const std::vector<HomPoly>& qs,
                                        uint64_t seed);

}  // namespace heightlab
