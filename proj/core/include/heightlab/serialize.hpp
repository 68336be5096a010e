#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "heightlab/harness.hpp"
#include "heightlab/ideals.hpp"
#include "heightlab/polyring.hpp"

namespace heightlab {

// Ideals serialize as {"vars": m+1, "gens": ["x0*x2 - x1^2", ...]}.
PolyIdeal ideal_from_json(std::string_view text);
std::string ideal_to_json(const PolyIdeal& ideal);

// Polynomial family files: {"vars": m+1, "polys": ["x0", ...]}.
std::pair<size_t, std::vector<HomPoly>> polys_from_json(std::string_view text);

// Experiment configs:
// {"variety": {...}, "polys": [...], "N": 3, "epsilon": "1/10",
//  "places": ["inf","2","3","5"], "H": 50, "mode": "main"}.
// H, mode and places carry defaults and can be overridden by CLI flags.
ExperimentConfig config_from_json(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace heightlab
