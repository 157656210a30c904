#pragma once

#include <string>
#include <utility>
#include <vector>

#include "golab/gometric.hpp"
#include "golab/homspace.hpp"

#include "json.hpp"

namespace golab::spacefile {

/// Parsed space definition: factors, torus basis over the concatenated Cartan
/// coordinates, and an optional metric (block form or full matrix).
struct SpaceConfig {
  std::vector<std::pair<rootsys::RootType, int>> factors;
  homspace::TorusSpec torus;

  bool has_metric = false;
  bool metric_is_blocks = false;
  lin::Mat sprime_block;      // block form; may be 0x0
  std::vector<Rat> lambdas;   // block form
  lin::Mat full_matrix;       // full form
};

SpaceConfig parse_space_config(const nlohmann::json& doc);

/// format: "toml", "json", or "auto" (JSON when the text starts with '{').
SpaceConfig load_space_config(const std::string& text, const std::string& format = "auto");

homspace::SpaceGS build_from_config(const SpaceConfig& cfg);

/// Throws ParseError when the config carries no metric.
gometric::MetricEndo metric_from_config(const homspace::SpaceGS& space, const SpaceConfig& cfg);

}  // namespace golab::spacefile
