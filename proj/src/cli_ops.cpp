#include "golab/cli_ops.hpp"

#include "golab/errors.hpp"
#include "golab/flagstruct.hpp"
#include "golab/gometric.hpp"
#include "golab/lemmalab.hpp"
#include "golab/spacefile.hpp"

namespace golab::cliops {

nlohmann::ordered_json rootsys_show(const std::string& type, int rank) {
  auto rs = rootsys::build_root_system(type, rank);
  return rootsys::to_json(rs);
}

nlohmann::ordered_json flag_describe(const std::string& type, int rank,
                                     const std::vector<int>& painted_1based) {
  auto rs = rootsys::build_root_system(type, rank);
  std::vector<int> painted;
  for (int i : painted_1based) painted.push_back(i - 1);
  auto pd = flagstruct::make_painted(std::move(rs), std::move(painted));
  return flagstruct::flag_report(pd);
}

nlohmann::ordered_json space_decompose(const std::string& config_text, const std::string& format) {
  auto cfg = spacefile::load_space_config(config_text, format);
  auto space = spacefile::build_from_config(cfg);
  return homspace::decompose_report(space);
}

CheckOutcome space_check(const std::string& config_text, const std::string& which,
                         const std::string& format, int samples, unsigned long long seed) {
  auto cfg = spacefile::load_space_config(config_text, format);
  auto space = spacefile::build_from_config(cfg);
  auto metric = spacefile::metric_from_config(space, cfg);

  CheckOutcome out;
  out.report["check"] = which;
  out.report["space"] = homspace::decompose_report(space);

  if (which == "go" || which == "natred") {
    auto verdict = gometric::is_go_linear(space, metric, samples, seed);
    out.holds = verdict.go;
    out.report["result"] = verdict.to_json();
    if (which == "natred" && verdict.go)
      out.report["result"]["note"] =
          "the equivariant linear geodesic graph above is a natural-reductivity certificate";
  } else if (which == "normal") {
    auto verdict = gometric::check_normal(space, metric);
    out.holds = verdict.normal;
    out.report["result"] = verdict.to_json();
  } else if (which == "necform") {
    auto rep = gometric::necform_check(space, metric);
    out.holds = rep.passes;
    out.report["result"] = rep.to_json();
  } else {
    throw ParseError("unknown check '" + which + "' (expected go, natred, normal, necform)");
  }
  out.report["holds"] = out.holds;
  return out;
}

nlohmann::ordered_json lemmas_verify(int rank_max) {
  if (rank_max < 1) throw ParseError("rank_max must be at least 1");
  return lemmalab::run_lemma_sweeps(rank_max);
}

}  // namespace golab::cliops
