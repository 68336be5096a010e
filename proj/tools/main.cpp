#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "heightlab/chow.hpp"
#include "heightlab/harness.hpp"
#include "heightlab/heights.hpp"
#include "heightlab/ideals.hpp"
#include "heightlab/position.hpp"
#include "heightlab/serialize.hpp"

namespace hl = heightlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;

uint64_t default_seed() {
  if (const char* env = std::getenv("HEIGHTLAB_SEED")) return std::strtoull(env, nullptr, 10);
  return 0;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

struct HeightArgs {
  std::string point;
  std::string poly;
  size_t vars = 0;
  bool exact = false;
  bool json = false;
};

int run_height(const HeightArgs& a) {
  hl::HeightValue h;
  if (!a.poly.empty()) {
    hl::HomPoly q = a.vars ? hl::parse_poly(a.poly, a.vars) : hl::parse_poly(a.poly);
    h = hl::height_poly(q);
  } else {
    h = hl::height_point(hl::parse_point(a.point));
  }
  if (a.json) {
    std::cout << "{\"height\": " << hl::format_real(h.log_value) << ", \"norm_product\": \""
              << hl::rat_str(h.norm_product) << "\"}\n";
  } else {
    std::cout << hl::format_real(h.log_value) << "\n";
    if (a.exact) std::cout << "norm_product " << hl::rat_str(h.norm_product) << "\n";
  }
  return kExitOk;
}

struct WeilArgs {
  std::string poly, point, place;
  bool exact = false;
  bool json = false;
};

int run_weil(const WeilArgs& a) {
  hl::ProjPoint x = hl::parse_point(a.point);
  hl::HomPoly q = hl::parse_poly(a.poly, x.num_coords());
  hl::Place v = hl::Place::parse(a.place);
  hl::Rat ratio = hl::weil_ratio(q, v, x);
  double lambda = hl::log_rat(ratio);
  if (a.json) {
    std::cout << "{\"lambda\": " << hl::format_real(lambda) << ", \"ratio\": \""
              << hl::rat_str(ratio) << "\", \"place\": \"" << v.str() << "\"}\n";
  } else {
    std::cout << hl::format_real(lambda) << "\n";
    if (a.exact) std::cout << "ratio " << hl::rat_str(ratio) << "\n";
  }
  return kExitOk;
}

struct IdealArgs {
  std::string ideal_path;
  uint32_t u = 1;
  std::string weights;
  bool json = false;
};

int run_hilbert_fn(const IdealArgs& a) {
  hl::PolyIdeal ideal = hl::ideal_from_json(hl::read_file(a.ideal_path));
  long h = hl::hilbert_function(ideal, a.u);
  if (a.json)
    std::cout << "{\"u\": " << a.u << ", \"value\": " << h << "}\n";
  else
    std::cout << h << "\n";
  return kExitOk;
}

int run_hilbert_weight(const IdealArgs& a) {
  hl::PolyIdeal ideal = hl::ideal_from_json(hl::read_file(a.ideal_path));
  hl::WeightVector c = hl::parse_weights(a.weights);
  hl::HilbertWeight s = hl::hilbert_weight(ideal, a.u, c);
  if (a.json) {
    std::cout << "{\"u\": " << a.u << ", \"value\": \"" << hl::rat_str(s.value) << "\", \"basis\": [";
    for (size_t i = 0; i < s.basis.size(); ++i) {
      if (i) std::cout << ", ";
      std::cout << "\"" << s.basis[i].str() << "\"";
    }
    std::cout << "]}\n";
  } else {
    std::cout << hl::rat_str(s.value) << "\n";
    for (const hl::Monomial& m : s.basis) std::cout << m.str() << "\n";
  }
  return kExitOk;
}

struct ChowArgs {
  std::string point, hypersurface, ideal_path, weights, convention = "dimension";
  std::vector<std::string> span;
  size_t vars = 0;
  uint32_t estimate_u = 0;
  bool json = false;
};

int run_chow_weight(const ChowArgs& a) {
  hl::WeightVector c = hl::parse_weights(a.weights);
  hl::ChowWeightResult res;
  std::string form;
  if (!a.point.empty()) {
    hl::ChowForm cf = hl::chow_form_point(hl::parse_point(a.point));
    res = hl::chow_weight(cf, c);
    form = cf.str();
  } else if (!a.span.empty()) {
    std::vector<hl::ProjPoint> pts;
    for (const std::string& s : a.span) pts.push_back(hl::parse_point(s));
    hl::ChowForm cf = hl::chow_form_linear(pts, pts.front().ambient_dim());
    res = hl::chow_weight(cf, c);
    form = cf.str();
  } else if (!a.hypersurface.empty()) {
    hl::HomPoly f = a.vars ? hl::parse_poly(a.hypersurface, a.vars) : hl::parse_poly(a.hypersurface);
    hl::ChowForm cf = hl::chow_form_hypersurface(f);
    res = hl::chow_weight(cf, c);
    form = cf.str();
  } else if (!a.ideal_path.empty()) {
    hl::PolyIdeal ideal = hl::ideal_from_json(hl::read_file(a.ideal_path));
    if (auto exact = hl::chow_weight_exact(ideal, c)) {
      res = exact->first;
      form = exact->second.str();
    } else if (a.estimate_u > 0) {
      hl::BoundConvention conv = a.convention == "ambient" ? hl::BoundConvention::ambient
                                                           : hl::BoundConvention::dimension;
      res = hl::chow_weight_estimate(ideal, c, a.estimate_u, conv);
    } else {
      throw std::invalid_argument(
          "ideal is outside the exact classes (empty/linear/hypersurface); pass --estimate-u");
    }
  } else {
    throw std::invalid_argument("chow-weight: give one of --point, --span, --hypersurface, --ideal");
  }
  if (a.json) {
    std::cout << "{\"exact\": " << (res.exact ? "true" : "false") << ", \"lo\": \""
              << hl::rat_str(res.lo) << "\", \"hi\": \"" << hl::rat_str(res.hi) << "\"";
    if (!form.empty()) std::cout << ", \"chow_form\": \"" << json_escape(form) << "\"";
    std::cout << "}\n";
  } else if (res.exact) {
    std::cout << hl::rat_str(res.lo) << "\n";
    if (!form.empty()) std::cout << "chow_form " << form << "\n";
  } else {
    std::cout << "[" << hl::rat_str(res.lo) << ", " << hl::rat_str(res.hi) << "] (estimated at u="
              << res.estimate_u << ")\n";
  }
  return kExitOk;
}

struct PositionArgs {
  std::string ideal_path, polys_path;
  int n_position = 0;
  uint64_t seed = default_seed();
  bool json = false;
};

int run_check_position(const PositionArgs& a) {
  hl::VarietySpec variety = hl::make_variety(hl::ideal_from_json(hl::read_file(a.ideal_path)));
  auto [vars, polys] = hl::polys_from_json(hl::read_file(a.polys_path));
  if (vars != variety.ideal.num_vars)
    throw std::invalid_argument("variety and polynomial family disagree on variable count");
  hl::PositionReport report = hl::check_subgeneral(variety, polys, a.n_position);
  if (a.json) {
    std::cout << "{\"N\": " << report.n_tested << ", \"holds\": " << (report.holds ? "true" : "false");
    if (report.witness) {
      std::cout << ", \"witness\": [";
      for (size_t i = 0; i < report.witness->size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << (*report.witness)[i] + 1;
      }
      std::cout << "]";
    }
    std::cout << "}\n";
  } else if (report.holds) {
    std::cout << "holds: the family is in " << report.n_tested << "-subgeneral position\n";
  } else {
    std::cout << "fails: witness subset";
    for (size_t idx : *report.witness) std::cout << " Q" << idx + 1;
    std::cout << "\n";
  }
  return kExitOk;
}

int run_replace(const PositionArgs& a) {
  hl::VarietySpec variety = hl::make_variety(hl::ideal_from_json(hl::read_file(a.ideal_path)));
  auto [vars, polys] = hl::polys_from_json(hl::read_file(a.polys_path));
  if (vars != variety.ideal.num_vars)
    throw std::invalid_argument("variety and polynomial family disagree on variable count");
  auto [normalized, d] = hl::normalize_degrees(polys);
  hl::ReplacementResult rep = hl::replace_hypersurfaces(variety, normalized, a.seed);
  if (a.json) {
    std::cout << "{\"attempts\": " << rep.attempts << ", \"degree\": " << d << ", \"polys\": [";
    for (size_t i = 0; i < rep.polys.size(); ++i) {
      if (i) std::cout << ", ";
      std::cout << "\"" << json_escape(rep.polys[i].str()) << "\"";
    }
    std::cout << "], \"coeffs\": [";
    for (size_t t = 0; t < rep.coeffs.size(); ++t) {
      if (t) std::cout << ", ";
      std::cout << "[";
      for (size_t j = 0; j < rep.coeffs[t].size(); ++j) {
        if (j) std::cout << ", ";
        std::cout << "\"" << hl::rat_str(rep.coeffs[t][j]) << "\"";
      }
      std::cout << "]";
    }
    std::cout << "]}\n";
  } else {
    std::cout << "attempts " << rep.attempts << "\n";
    for (size_t i = 0; i < rep.polys.size(); ++i)
      std::cout << "P" << i + 1 << " = " << rep.polys[i].str() << "\n";
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string config_path;
  long height = 0;
  std::string mode, places, csv_path, summary_path;
  int threads = 1;
  bool json = false;
};

hl::ExperimentConfig load_config(const VerifyArgs& a) {
  hl::ExperimentConfig cfg = hl::config_from_json(hl::read_file(a.config_path));
  if (a.height > 0) cfg.height_bound = a.height;
  if (!a.mode.empty()) cfg.mode = hl::parse_bound_mode(a.mode);
  if (!a.places.empty()) cfg.places = hl::parse_place_set(a.places);
  return cfg;
}

int run_verify(const VerifyArgs& a) {
  hl::ExperimentConfig cfg = load_config(a);
  hl::VerificationReport report = hl::run_verification(cfg, a.threads);
  std::string summary = hl::summary_json(report.summary);
  if (!a.csv_path.empty()) {
    std::ofstream out(a.csv_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + a.csv_path + "'");
    hl::write_csv(out, report);
  } else {
    hl::write_csv(std::cout, report);
  }
  if (!a.summary_path.empty()) {
    std::ofstream out(a.summary_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + a.summary_path + "'");
    out << summary << "\n";
  } else {
    std::cout << summary << "\n";
  }
  return kExitOk;
}

int run_compare(const VerifyArgs& a) {
  hl::ExperimentConfig cfg = load_config(a);
  std::vector<hl::CompareRow> rows = hl::compare_bounds(cfg, a.threads);
  if (!a.csv_path.empty()) {
    std::ofstream out(a.csv_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + a.csv_path + "'");
    hl::write_compare_csv(out, rows);
  } else {
    hl::write_compare_csv(std::cout, rows);
  }
  return kExitOk;
}

struct EliminateArgs {
  std::string ideal_path, map;
};

int run_eliminate(const EliminateArgs& a) {
  hl::PolyIdeal variety = hl::ideal_from_json(hl::read_file(a.ideal_path));
  std::vector<hl::HomPoly> phi;
  std::string cur;
  std::stringstream ss{a.map};
  while (std::getline(ss, cur, ','))
    if (!cur.empty()) phi.push_back(hl::parse_poly(cur, variety.num_vars));
  hl::PolyIdeal image = hl::image_ideal(variety, phi);
  std::cout << hl::ideal_to_json(image) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"heightlab: heights, Weil functions, Hilbert/Chow weights and height-inequality checks over Q"};
  app.require_subcommand(1);

  HeightArgs height_args;
  auto* height = app.add_subcommand("height", "absolute logarithmic height of a point or polynomial");
  height->add_option("point", height_args.point, "projective point \"(a0:...:am)\"");
  height->add_option("--poly", height_args.poly, "polynomial instead of a point");
  height->add_option("--vars", height_args.vars, "variable count for --poly");
  height->add_flag("--exact", height_args.exact, "also print the exact norm product");
  height->add_flag("--json", height_args.json);

  WeilArgs weil_args;
  auto* weil = app.add_subcommand("weil", "Weil function lambda_{Q,v}(x)");
  weil->add_option("--poly", weil_args.poly)->required();
  weil->add_option("--point", weil_args.point)->required();
  weil->add_option("--place", weil_args.place, "inf or a prime")->required();
  weil->add_flag("--exact", weil_args.exact);
  weil->add_flag("--json", weil_args.json);

  IdealArgs hf_args;
  auto* hf = app.add_subcommand("hilbert-fn", "Hilbert function H(u) of a homogeneous ideal");
  hf->add_option("--ideal", hf_args.ideal_path, "ideal JSON file")->required();
  hf->add_option("--u", hf_args.u)->required();
  hf->add_flag("--json", hf_args.json);

  IdealArgs hw_args;
  auto* hw = app.add_subcommand("hilbert-weight", "Hilbert weight S(u,c) with a witnessing basis");
  hw->add_option("--ideal", hw_args.ideal_path)->required();
  hw->add_option("--u", hw_args.u)->required();
  hw->add_option("--weights", hw_args.weights, "comma-separated rationals")->required();
  hw->add_flag("--json", hw_args.json);

  ChowArgs chow_args;
  auto* chow = app.add_subcommand("chow-weight", "Chow weight e_X(c), exact or estimated");
  chow->add_option("--point", chow_args.point);
  chow->add_option("--span", chow_args.span, "spanning points of a linear subvariety");
  chow->add_option("--hypersurface", chow_args.hypersurface);
  chow->add_option("--vars", chow_args.vars);
  chow->add_option("--ideal", chow_args.ideal_path);
  chow->add_option("--weights", chow_args.weights)->required();
  chow->add_option("--estimate-u", chow_args.estimate_u, "level for the interval estimate");
  chow->add_option("--convention", chow_args.convention, "ambient|dimension");
  chow->add_flag("--json", chow_args.json);

  PositionArgs pos_args;
  auto* pos = app.add_subcommand("check-position", "N-subgeneral position test");
  pos->add_option("--ideal", pos_args.ideal_path)->required();
  pos->add_option("--polys", pos_args.polys_path)->required();
  pos->add_option("--N", pos_args.n_position)->required();
  pos->add_flag("--json", pos_args.json);

  PositionArgs rep_args;
  auto* rep = app.add_subcommand("replace", "replacing-hypersurfaces construction");
  rep->add_option("--ideal", rep_args.ideal_path)->required();
  rep->add_option("--polys", rep_args.polys_path, "N+1 polynomials")->required();
  rep->add_option("--seed", rep_args.seed);
  rep->add_flag("--json", rep_args.json);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "height-inequality verification over enumerated points");
  verify->add_option("--config", verify_args.config_path)->required();
  verify->add_option("--H", verify_args.height, "height bound override");
  verify->add_option("--mode", verify_args.mode, "main|theoremB|theoremC|theoremD|theoremE");
  verify->add_option("--places", verify_args.places, "e.g. inf,2,3");
  verify->add_option("--threads", verify_args.threads);
  verify->add_option("--csv", verify_args.csv_path, "CSV output path (default stdout)");
  verify->add_option("--summary", verify_args.summary_path, "summary JSON path (default stdout)");

  VerifyArgs compare_args;
  auto* compare = app.add_subcommand("compare", "margins under all bound presets");
  compare->add_option("--config", compare_args.config_path)->required();
  compare->add_option("--H", compare_args.height);
  compare->add_option("--places", compare_args.places);
  compare->add_option("--threads", compare_args.threads);
  compare->add_option("--csv", compare_args.csv_path);

  EliminateArgs elim_args;
  auto* elim = app.add_subcommand("eliminate", "image ideal of a map given by equal-degree forms");
  elim->add_option("--ideal", elim_args.ideal_path)->required();
  elim->add_option("--map", elim_args.map, "comma-separated forms")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (height->parsed()) return run_height(height_args);
    if (weil->parsed()) return run_weil(weil_args);
    if (hf->parsed()) return run_hilbert_fn(hf_args);
    if (hw->parsed()) return run_hilbert_weight(hw_args);
    if (chow->parsed()) return run_chow_weight(chow_args);
    if (pos->parsed()) return run_check_position(pos_args);
    if (rep->parsed()) return run_replace(rep_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (compare->parsed()) return run_compare(compare_args);
    if (elim->parsed()) return run_eliminate(elim_args);
  } catch (const hl::ReplacementBudgetExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}
