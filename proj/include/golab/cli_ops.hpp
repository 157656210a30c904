#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace golab::cliops {

nlohmann::ordered_json rootsys_show(const std::string& type, int rank);

/// The `flag describe` document; painted nodes are 1-based here.
nlohmann::ordered_json flag_describe(const std::string& type, int rank,
                                     const std::vector<int>& painted_1based);

nlohmann::ordered_json space_decompose(const std::string& config_text,
                                       const std::string& format = "auto");

struct CheckOutcome {
  bool holds = false;
  nlohmann::ordered_json report;
};

/// which: "go", "natred", "normal" or "necform".
CheckOutcome space_check(const std::string& config_text, const std::string& which,
                         const std::string& format = "auto", int samples = 200,
                         unsigned long long seed = 1);

nlohmann::ordered_json lemmas_verify(int rank_max);

}  // namespace golab::cliops
