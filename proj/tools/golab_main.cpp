#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "golab/cli_ops.hpp"
#include "golab/errors.hpp"
#include "golab/rootsys.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw golab::ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_json(const nlohmann::ordered_json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<int> parse_painted(const std::string& spec) {
  std::vector<int> out;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoi(tok));
  }
  if (out.empty()) throw golab::ParseError("empty painted set");
  return out;
}

void print_rootsys_text(const nlohmann::ordered_json& j) {
  std::cout << j["type"].get<std::string>() << j["rank"].get<int>() << ": "
            << j["positive_roots"].size() << " positive roots\n";
  std::cout << "simple roots (ambient):\n";
  for (const auto& r : j["simple_roots"]) {
    std::cout << "  [";
    for (size_t i = 0; i < r.size(); ++i)
      std::cout << (i ? ", " : "") << r[i].get<std::string>();
    std::cout << "]\n";
  }
  std::cout << "positive roots (coefficients over the simple basis):\n";
  for (const auto& r : j["positive_roots"]) std::cout << "  " << r.dump() << "\n";
  std::cout << "cartan matrix:\n";
  for (const auto& row : j["cartan_matrix"]) std::cout << "  " << row.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for invariant metrics on compact homogeneous spaces"};
  app.require_subcommand(1);

  // rootsys show
  auto* rootsys_cmd = app.add_subcommand("rootsys", "root system operations");
  rootsys_cmd->require_subcommand(1);
  std::string rs_type;
  int rs_rank = 0;
  bool rs_json = false;
  auto* show = rootsys_cmd->add_subcommand("show", "print simple roots, positive roots, Cartan matrix");
  show->add_option("type", rs_type, "A, B, C, D or G")->required();
  show->add_option("rank", rs_rank, "rank")->required();
  show->add_flag("--json", rs_json, "emit JSON");

  // flag describe
  auto* flag_cmd = app.add_subcommand("flag", "painted-diagram operations");
  flag_cmd->require_subcommand(1);
  std::string fl_type, fl_painted;
  int fl_rank = 0;
  auto* describe = flag_cmd->add_subcommand("describe", "partition and isotropy data of a painted diagram");
  describe->add_option("type", fl_type, "A, B, C, D or G")->required();
  describe->add_option("rank", fl_rank, "rank")->required();
  describe->add_option("--painted", fl_painted, "comma-separated 1-based painted nodes")->required();

  // space decompose / check
  auto* space_cmd = app.add_subcommand("space", "homogeneous space operations");
  space_cmd->require_subcommand(1);
  std::string sp_config, sp_format = "auto";
  auto* decomp = space_cmd->add_subcommand("decompose", "tangent decomposition of a configured space");
  decomp->add_option("config", sp_config, "space definition file (TOML or JSON)")->required();
  decomp->add_option("--format", sp_format, "auto, toml or json");

  std::string ck_config, ck_format = "auto";
  bool ck_go = false, ck_natred = false, ck_normal = false, ck_necform = false;
  int ck_samples = 200;
  unsigned long long ck_seed = 1;
  auto* check = space_cmd->add_subcommand("check", "decide metric properties");
  check->add_option("config", ck_config, "space definition file with a [metric] table")->required();
  check->add_flag("--go", ck_go, "geodesic orbit");
  check->add_flag("--natred", ck_natred, "naturally reductive");
  check->add_flag("--normal", ck_normal, "normal metric");
  check->add_flag("--necform", ck_necform, "necessary block form");
  check->add_option("--format", ck_format, "auto, toml or json");
  check->add_option("--samples", ck_samples, "seeded witness sample budget");
  check->add_option("--seed", ck_seed, "deterministic seed");

  // lemmas verify
  auto* lemmas_cmd = app.add_subcommand("lemmas", "brute-force lemma sweeps");
  lemmas_cmd->require_subcommand(1);
  int lm_rank_max = 5;
  auto* verify = lemmas_cmd->add_subcommand("verify", "run every sweep up to a rank bound");
  verify->add_option("--rank-max", lm_rank_max, "largest classical rank (default 5)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*show) {
      auto j = golab::cliops::rootsys_show(rs_type, rs_rank);
      if (rs_json)
        print_json(j);
      else
        print_rootsys_text(j);
      return 0;
    }
    if (*describe) {
      print_json(golab::cliops::flag_describe(fl_type, fl_rank, parse_painted(fl_painted)));
      return 0;
    }
    if (*decomp) {
      print_json(golab::cliops::space_decompose(read_file(sp_config), sp_format));
      return 0;
    }
    if (*check) {
      int picked = int(ck_go) + int(ck_natred) + int(ck_normal) + int(ck_necform);
      if (picked != 1) {
        std::cerr << "pick exactly one of --go, --natred, --normal, --necform\n";
        return 2;
      }
      std::string which = ck_go ? "go" : ck_natred ? "natred" : ck_normal ? "normal" : "necform";
      auto outcome = golab::cliops::space_check(read_file(ck_config), which, ck_format,
                                                ck_samples, ck_seed);
      print_json(outcome.report);
      return outcome.holds ? 0 : 1;
    }
    if (*verify) {
      auto j = golab::cliops::lemmas_verify(lm_rank_max);
      print_json(j);
      return j["total_violations"] == 0 ? 0 : 1;
    }
  } catch (const golab::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const golab::InvariantViolation& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const golab::NotPositiveDefinite& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const golab::NotPositive& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const golab::InvalidRank& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const golab::DimensionMismatch& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const golab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
