// tglab: command-line front end for the time-graph workbench.
//
// Every subcommand writes JSON to stdout, or to --out. `solve` exits with
// 10 (yes) or 11 (no); other subcommands exit 0 on success.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tglab/canonical.hpp"
#include "tglab/lab.hpp"
#include "tglab/liftbasis.hpp"
#include "tglab/solver.hpp"
#include "tglab/timegraph.hpp"

namespace {

constexpr int kExitYes = 10;
constexpr int kExitNo = 11;

struct Output {
  std::string path;
  std::unique_ptr<std::ofstream> file;

  std::ostream& stream() {
    if (path.empty()) return std::cout;
    if (!file) {
      file = std::make_unique<std::ofstream>(path);
      if (!*file) throw std::runtime_error("cannot open output file " + path);
    }
    return *file;
  }
};

tglab::Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file " + path);
  return tglab::read_graph(in);
}

tglab::TimeGraph load_time_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open time-graph file " + path);
  return tglab::read_time_graph(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Time-graph GF(2) workbench: reductions, bases, decision procedure, conjecture harness"};
  app.require_subcommand(1);

  Output output;
  std::string cache_dir;
  app.add_option("--out", output.path, "Write output to this file instead of stdout");
  app.add_option("--cache-dir", cache_dir,
                 std::string("Directory for cached H_P^n bases (default: $") + tglab::kCacheDirEnv + ")");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Reduce a graph to its time-graph");
  std::string reduce_file;
  std::string reduce_format = "json";
  reduce->add_option("graph-file", reduce_file)->required();
  reduce->add_option("--format", reduce_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Brute-force Hamiltonian path and time-graph oracles");
  std::string oracle_file;
  oracle->add_option("graph-file", oracle_file)->required();

  // basis
  auto* basis = app.add_subcommand("basis", "Recursive basis of H_P^n made of permutation indicators");
  int basis_order = 0;
  int basis_cap = tglab::kDefaultBasisCap;
  basis->add_option("--order", basis_order)->required()->check(CLI::Range(1, 12));
  basis->add_option("--cap", basis_cap, "Largest order allowed");

  // dim
  auto* dim = app.add_subcommand("dim", "Dimension table of H^n and H_P^n");
  int dim_min = 2;
  int dim_max = 5;
  dim->add_option("--min", dim_min)->check(CLI::Range(2, 12));
  dim->add_option("--max", dim_max)->required()->check(CLI::Range(2, 12));

  // solve
  auto* solve = app.add_subcommand("solve", "Decide Hamiltonian path via the linear system");
  std::string solve_file;
  bool solve_no_oracle = false;
  solve->add_option("graph-file", solve_file)->required();
  solve->add_flag("--no-oracle", solve_no_oracle, "Skip the brute-force comparison");

  // conjectures
  auto* conj = app.add_subcommand("conjectures", "Randomized conjecture campaign (JSON lines)");
  tglab::CampaignConfig campaign;
  std::string mode = "top";
  conj->add_option("--n", campaign.n)->required()->check(CLI::Range(2, 6));
  conj->add_option("--trials", campaign.trials)->required();
  conj->add_option("--seed", campaign.seed);
  conj->add_option("--conjecture", campaign.conjecture, "1 or 2 (default: both)")->check(CLI::Range(1, 2));
  conj->add_option("--orders", campaign.orders, "Enumerations of G^c per trial")->check(CLI::PositiveNumber);
  conj->add_option("--mode", mode, "Second-conjecture reading: top or chain")
      ->check(CLI::IsMember({"top", "chain"}));
  conj->add_flag("--timing", campaign.timing, "Record per-report wall time (breaks byte-identical output)");

  // crossval
  auto* cross = app.add_subcommand("crossval", "Compare the decision procedure with the brute-force oracle");
  tglab::CrossvalConfig cv;
  bool exhaustive = false;
  std::size_t random_count = 0;
  cross->add_option("--n", cv.n)->required()->check(CLI::Range(1, 8));
  auto* ex_flag = cross->add_flag("--exhaustive", exhaustive, "All graphs on n vertices");
  auto* rnd_opt = cross->add_option("--random", random_count, "Number of random graphs");
  ex_flag->excludes(rnd_opt);
  cross->add_option("--seed", cv.seed);

  // canonical
  auto* canon = app.add_subcommand("canonical", "Canonical basis of H^n for a time-graph");
  std::string canon_file;
  std::uint64_t order_seed = 0;
  std::uint64_t canon_basis_seed = 0;
  canon->add_option("timegraph-file", canon_file)->required();
  canon->add_option("--order-seed", order_seed, "Shuffle the complement enumeration (0: increasing index)");
  canon->add_option("--basis-seed", canon_basis_seed, "Shuffle candidates within layers (0: lexicographic)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    tglab::BasisOptions basis_options;
    basis_options.cache_dir = cache_dir.empty() ? tglab::cache_dir_from_env()
                                                : std::optional<std::filesystem::path>(cache_dir);

    if (*reduce) {
      const auto tg = tglab::reduce_hamp(load_graph(reduce_file));
      if (reduce_format == "text") {
        tglab::write_time_graph(output.stream(), tg);
      } else {
        output.stream() << nlohmann::json{{"n", tg.order()}, {"edges", tg.edge_indices()}}.dump() << '\n';
      }
    } else if (*oracle) {
      const auto g = load_graph(oracle_file);
      const auto tg = tglab::reduce_hamp(g);
      nlohmann::json perms = nlohmann::json::array();
      for (const auto& p : tglab::incident_permutations(tg)) perms.push_back(p.image());
      output.stream() << nlohmann::json{{"n", g.order()},
                                        {"hamiltonian_path", tglab::hamiltonian_path_oracle(g)},
                                        {"time_graph_hamiltonian", !perms.empty()},
                                        {"incident_permutations", perms}}
                             .dump()
                      << '\n';
    } else if (*basis) {
      basis_options.cap = basis_cap;
      const auto perms = tglab::algorithm1(basis_order, basis_options);
      output.stream() << tglab::basis_to_json(basis_order, perms).dump() << '\n';
    } else if (*dim) {
      output.stream() << tglab::to_json(tglab::dimension_table(dim_min, dim_max, basis_options)).dump() << '\n';
    } else if (*solve) {
      const auto g = load_graph(solve_file);
      const auto decision = tglab::algorithm2(g, basis_options);
      auto out = tglab::to_json(decision, g.order());
      if (!solve_no_oracle && g.order() <= tglab::kDefaultPathCap) {
        const bool truth = tglab::hamiltonian_path_oracle(g);
        out["oracle_answer"] = truth ? "yes" : "no";
        if (decision.answer && !truth) out["conjecture_flag"] = "candidate_counterexample";
        if (!decision.answer && truth) out["conjecture_flag"] = "false_negative";
      }
      output.stream() << out.dump() << '\n';
      return decision.answer ? kExitYes : kExitNo;
    } else if (*conj) {
      campaign.mode = tglab::descent_mode_from_string(mode);
      campaign.basis = basis_options;
      tglab::run_campaign(campaign, output.stream());
    } else if (*cross) {
      if (!exhaustive && random_count == 0) exhaustive = true;
      cv.source = exhaustive ? tglab::GraphSource::kExhaustive : tglab::GraphSource::kRandom;
      cv.count = random_count;
      cv.basis = basis_options;
      const auto summary = tglab::crossval(cv);
      output.stream() << tglab::to_json(summary, cv).dump() << '\n';
    } else if (*canon) {
      const auto tg = load_time_graph(canon_file);
      const auto order = order_seed == 0 ? tglab::default_complement_order(tg)
                                         : tglab::shuffled_complement_order(tg, order_seed);
      const auto cb = tglab::build_canonical_basis(tg, order, canon_basis_seed);
      output.stream() << tglab::to_json(cb).dump() << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "tglab: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
