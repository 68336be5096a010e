#include "heightlab/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace heightlab {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  return json::parse(text.begin(), text.end());
}

PolyIdeal ideal_from(const json& j) {
  if (!j.contains("vars")) throw std::invalid_argument("ideal json: missing \"vars\"");
  size_t vars = j.at("vars").get<size_t>();
  if (vars == 0) throw std::invalid_argument("ideal json: \"vars\" must be >= 1");
  std::vector<HomPoly> gens;
  if (j.contains("gens"))
    for (const auto& g : j.at("gens")) gens.push_back(parse_poly(g.get<std::string>(), vars));
  return make_ideal(vars, std::move(gens));
}

Rat rat_from(const json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw std::invalid_argument("config json: expected a rational as string or integer");
}

}  // namespace

PolyIdeal ideal_from_json(std::string_view text) { return ideal_from(parse_json(text)); }

std::string ideal_to_json(const PolyIdeal& ideal) {
  json j;
  j["vars"] = ideal.num_vars;
  j["gens"] = json::array();
  for (const HomPoly& g : ideal.gens) j["gens"].push_back(g.str());
  return j.dump();
}

std::pair<size_t, std::vector<HomPoly>> polys_from_json(std::string_view text) {
  json j = parse_json(text);
  size_t vars = j.at("vars").get<size_t>();
  std::vector<HomPoly> polys;
  for (const auto& p : j.at("polys")) polys.push_back(parse_poly(p.get<std::string>(), vars));
  return {vars, std::move(polys)};
}

ExperimentConfig config_from_json(std::string_view text) {
  json j = parse_json(text);
  ExperimentConfig cfg;
  cfg.variety = make_variety(ideal_from(j.at("variety")));
  const size_t vars = cfg.variety.ideal.num_vars;
  for (const auto& p : j.at("polys")) cfg.polys.push_back(parse_poly(p.get<std::string>(), vars));
  cfg.n_position = j.at("N").get<int>();
  cfg.epsilon = rat_from(j.at("epsilon"));
  if (j.contains("places")) {
    std::vector<Place> places;
    for (const auto& p : j.at("places")) {
      if (p.is_string())
        places.push_back(Place::parse(p.get<std::string>()));
      else
        places.push_back(Place::finite(Int(p.get<long>())));
    }
    cfg.places = make_place_set(std::move(places));
  } else {
    cfg.places = parse_place_set("inf,2,3,5");
  }
  cfg.height_bound = j.contains("H") ? j.at("H").get<long>() : 10;
  cfg.mode = j.contains("mode") ? parse_bound_mode(j.at("mode").get<std::string>()) : BoundMode::main;
  return cfg;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace heightlab
