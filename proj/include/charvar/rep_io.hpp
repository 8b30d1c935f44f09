#pragma once

// JSON representation files:
//   {"family": "SU", "n": 2, "r": 3, "generators": [[[re, im], ...], ...]}
// Each generator is a row-major list of n*n [re, im] pairs.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "charvar/representation.hpp"

namespace charvar {

inline nlohmann::json to_json(const Representation& rep) {
  nlohmann::json gens = nlohmann::json::array();
  const auto n = static_cast<Eigen::Index>(rep.n());
  for (const auto& x : rep.generators()) {
    nlohmann::json flat = nlohmann::json::array();
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) flat.push_back({x(i, j).real(), x(i, j).imag()});
    gens.push_back(std::move(flat));
  }
  nlohmann::json j;
  j["family"] = std::string(to_string(rep.family()));
  j["n"] = rep.n();
  j["r"] = rep.r();
  j["generators"] = std::move(gens);
  return j;
}

inline Representation representation_from_json(const nlohmann::json& j) {
  try {
    const Family family = parse_family(j.at("family").get<std::string>());
    const auto n = j.at("n").get<std::size_t>();
    const auto r = j.at("r").get<std::size_t>();
    const auto& gens = j.at("generators");
    if (n < 1 || r < 1) throw structural_error("n and r must be >= 1");
    if (!gens.is_array() || gens.size() != r)
      throw structural_error("expected " + std::to_string(r) + " generators, found " + std::to_string(gens.size()));
    std::vector<CMatrix> mats;
    for (std::size_t g = 0; g < r; ++g) {
      const auto& flat = gens[g];
      if (!flat.is_array() || flat.size() != n * n)
        throw structural_error("generator " + std::to_string(g + 1) + " has " + std::to_string(flat.size()) +
                               " entries, expected " + std::to_string(n * n));
      CMatrix x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
      for (std::size_t k = 0; k < n * n; ++k) {
        const auto& e = flat[k];
        if (!e.is_array() || e.size() != 2) throw structural_error("matrix entries must be [re, im] pairs");
        x(static_cast<Eigen::Index>(k / n), static_cast<Eigen::Index>(k % n)) = complex(e[0].get<double>(), e[1].get<double>());
      }
      mats.push_back(std::move(x));
    }
    return {GroupSpec(family, n), std::move(mats)};
  } catch (const nlohmann::json::exception& e) {
    throw structural_error(std::string("malformed representation JSON: ") + e.what());
  }
}

inline std::string dump_representation(const Representation& rep) { return to_json(rep).dump() + "\n"; }

inline Representation parse_representation(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw structural_error(std::string("malformed representation JSON: ") + e.what());
  }
  return representation_from_json(j);
}

inline Representation load_representation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw structural_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_representation(ss.str());
}

} // namespace charvar
