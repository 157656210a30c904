#include "golab/spacefile.hpp"

#include "golab/errors.hpp"
#include "golab/tomlmini.hpp"

namespace golab::spacefile {

namespace {

Rat rat_from_json(const nlohmann::json& v, const std::string& where) {
  if (v.is_number_integer()) return Rat(v.get<long>());
  if (v.is_string()) return rat_from_string(v.get<std::string>());
  throw ParseError(where + ": expected an integer or a \"p/q\" string");
}

lin::Mat mat_from_json(const nlohmann::json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array of rows");
  int rows = int(v.size());
  int cols = rows == 0 ? 0 : int(v[0].size());
  lin::Mat m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!v[size_t(r)].is_array() || int(v[size_t(r)].size()) != cols)
      throw ParseError(where + ": ragged matrix");
    for (int c = 0; c < cols; ++c)
      m.at(r, c) = rat_from_json(v[size_t(r)][size_t(c)],
                                 where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  }
  return m;
}

}  // namespace

SpaceConfig parse_space_config(const nlohmann::json& doc) {
  SpaceConfig cfg;
  if (!doc.contains("factors") || !doc["factors"].is_array() || doc["factors"].empty())
    throw ParseError("config needs a nonempty [[factors]] list");
  for (const auto& f : doc["factors"]) {
    if (!f.contains("type") || !f.contains("rank"))
      throw ParseError("each factor needs 'type' and 'rank'");
    if (!f["rank"].is_number_integer()) throw ParseError("factor rank must be an integer");
    cfg.factors.emplace_back(rootsys::root_type_from_string(f["type"].get<std::string>()),
                             f["rank"].get<int>());
  }
  if (doc.contains("torus")) {
    if (!doc["torus"].is_array()) throw ParseError("'torus' must be an array of vectors");
    for (const auto& row : doc["torus"]) {
      if (!row.is_array()) throw ParseError("'torus' must be an array of vectors");
      RVec v;
      for (const auto& x : row) v.push_back(rat_from_json(x, "torus"));
      cfg.torus.basis.push_back(std::move(v));
    }
  }
  if (doc.contains("metric")) {
    const auto& m = doc["metric"];
    if (!m.is_object()) throw ParseError("[metric] must be a table");
    cfg.has_metric = true;
    bool has_lambdas = m.contains("lambdas");
    bool has_matrix = m.contains("matrix");
    if (has_lambdas == has_matrix)
      throw ParseError("[metric] needs exactly one of 'lambdas' (with optional 'sprime') or 'matrix'");
    if (has_lambdas) {
      cfg.metric_is_blocks = true;
      for (const auto& x : m["lambdas"]) cfg.lambdas.push_back(rat_from_json(x, "metric.lambdas"));
      if (m.contains("sprime")) cfg.sprime_block = mat_from_json(m["sprime"], "metric.sprime");
    } else {
      cfg.full_matrix = mat_from_json(m["matrix"], "metric.matrix");
    }
  }
  return cfg;
}

SpaceConfig load_space_config(const std::string& text, const std::string& format) {
  std::string fmt = format;
  if (fmt == "auto") {
    size_t i = text.find_first_not_of(" \t\r\n");
    fmt = (i != std::string::npos && text[i] == '{') ? "json" : "toml";
  }
  nlohmann::json doc;
  if (fmt == "json") {
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("json: ") + e.what());
    }
  } else if (fmt == "toml") {
    doc = tomlmini::parse(text);
  } else {
    throw ParseError("unknown config format '" + format + "'");
  }
  return parse_space_config(doc);
}

homspace::SpaceGS build_from_config(const SpaceConfig& cfg) {
  std::vector<chevalley::CompactAlgebra> factors;
  for (auto [t, r] : cfg.factors)
    factors.push_back(chevalley::build_compact(rootsys::build_root_system(t, r)));
  auto alg = chevalley::direct_sum(std::move(factors));
  int rank = homspace::total_rank(alg);
  for (const auto& v : cfg.torus.basis)
    if (int(v.size()) != rank)
      throw ParseError("torus vectors must have length " + std::to_string(rank) +
                       " (total rank)");
  return homspace::build_space(std::move(alg), cfg.torus);
}

gometric::MetricEndo metric_from_config(const homspace::SpaceGS& space, const SpaceConfig& cfg) {
  if (!cfg.has_metric) throw ParseError("config has no [metric] table");
  if (cfg.metric_is_blocks) {
    int ns = space.sprime_range.second - space.sprime_range.first;
    lin::Mat sp = cfg.sprime_block;
    if (sp.rows() == 0 && ns > 0) {
      // default identity on s' when omitted
      sp = lin::Mat::identity(ns);
    }
    return gometric::block_metric(space, sp, cfg.lambdas);
  }
  return gometric::make_metric(space, cfg.full_matrix);
}

}  // namespace golab::spacefile
