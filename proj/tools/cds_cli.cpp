#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cds/algorithms.hpp"
#include "cds/experiment.hpp"
#include "cds/graph.hpp"
#include "cds/topology.hpp"
#include "cds/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitFailure = 3;

int cmd_gen(const cds::GenSpec& spec, const std::string& out_stem) {
  cds::GeometricTopology topo = cds::generate(spec);
  cds::Graph g = cds::to_graph(topo);
  const std::string topo_path = out_stem + ".topo";
  const std::string graph_path = out_stem + ".graph";
  cds::save_topology_file(topo, topo_path);
  cds::save_graph_file(g, graph_path);
  std::cout << "prng=splitmix64 seed=" << spec.seed << " n=" << spec.n
            << " edges=" << g.edge_count() << " connected=" << (cds::is_connected(g) ? 1 : 0)
            << '\n'
            << "wrote " << topo_path << '\n'
            << "wrote " << graph_path << '\n';
  return kExitOk;
}

int cmd_solve(const std::string& graph_path, const std::string& algo, const std::string& rule) {
  cds::Graph g = cds::load_graph_file(graph_path);
  cds::CdsResult res = cds::run_algorithm(g, algo, cds::parse_mcds2_rule(rule));
  std::cout << "algorithm: " << res.algorithm << '\n' << "cds:";
  for (cds::NodeId x : res.cds) std::cout << ' ' << x;
  std::cout << '\n'
            << "size: " << res.size << '\n'
            << "valid: " << (res.is_valid_cds ? "true" : "false") << '\n'
            << "repaired: " << (res.repaired ? "true" : "false") << '\n';
  return res.is_valid_cds ? kExitOk : kExitFailure;
}

int cmd_oracle(const std::string& graph_path, int limit) {
  cds::Graph g = cds::load_graph_file(graph_path);
  cds::OracleResult res = cds::exact_min_cds(g, limit);
  std::cout << "min_size: " << res.min_size << '\n' << "witness:";
  for (cds::NodeId x : res.witness) std::cout << ' ' << x;
  std::cout << '\n' << "subsets_examined: " << res.subsets_examined << '\n';
  return kExitOk;
}

struct RunOptions {
  std::string config_path;
  std::string out_csv;
  std::string out_plot;
  std::string out_raw;
};

int cmd_run(const RunOptions& opt, const std::function<void(cds::ExperimentConfig&)>& apply_overrides) {
  cds::ExperimentConfig cfg;
  if (!opt.config_path.empty()) cfg = cds::parse_config_file(opt.config_path);
  apply_overrides(cfg);
  cds::validate_config(cfg);

  cds::ExperimentResult result = cds::run_experiment(cfg);
  for (const auto& failure : result.failures)
    std::cerr << "warning: generation failed for n=" << failure.n << " trial=" << failure.trial
              << ": " << failure.message << '\n';

  if (!opt.out_csv.empty())
    cds::emit_csv_file(result.records, opt.out_csv);
  else
    cds::emit_csv(result.records, std::cout);
  if (!opt.out_plot.empty()) cds::emit_plot_data_file(result.records, opt.out_plot);
  if (!opt.out_raw.empty()) cds::emit_raw_file(result.raw, opt.out_raw);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connected dominating set construction and benchmarking for "
               "wireless ad-hoc network graphs"};
  app.require_subcommand(1);

  // gen
  cds::GenSpec spec;
  std::string out_stem;
  bool connected_flag = false;
  auto* gen = app.add_subcommand("gen", "Generate a random geometric topology and its unit-disk graph");
  gen->add_option("--n", spec.n, "Node count")->required();
  gen->add_option("--area", spec.area_side, "Square side length")->capture_default_str();
  gen->add_option("--radius", spec.radius, "Wireless range")->capture_default_str();
  gen->add_option("--seed", spec.seed, "PRNG seed (SplitMix64)")->capture_default_str();
  gen->add_option("--out", out_stem, "Output stem; writes <out>.topo and <out>.graph")->required();
  gen->add_flag("--connected", connected_flag, "Redraw until the graph is connected");
  gen->add_option("--retries", spec.max_retries, "Redraw attempts before giving up")->capture_default_str();

  // solve
  std::string graph_path, algo, mcds2_rule = "single";
  auto* solve = app.add_subcommand("solve", "Run one CDS algorithm on a graph file");
  solve->add_option("--graph", graph_path, "Graph file")->required();
  solve->add_option("--algo", algo, "Algorithm")
      ->required()
      ->check(CLI::IsMember({"mmcds", "mcds1", "mcds2", "das"}));
  solve->add_option("--mcds2-rule", mcds2_rule, "Coverage rule for mcds2")->capture_default_str()
      ->check(CLI::IsMember({"single", "union"}));

  // oracle
  std::string oracle_graph;
  int oracle_limit = 12;
  auto* oracle = app.add_subcommand("oracle", "Exact minimum CDS by exhaustive search");
  oracle->add_option("--graph", oracle_graph, "Graph file")->required();
  oracle->add_option("--limit", oracle_limit, "Largest node count to accept")->capture_default_str();

  // run
  RunOptions run_opt;
  auto* run = app.add_subcommand("run", "Run the size-versus-n experiment");
  run->add_option("--config", run_opt.config_path, "key=value config file");
  run->add_option("--out-csv", run_opt.out_csv, "CSV destination (default: stdout)");
  run->add_option("--out-plot", run_opt.out_plot, "Plot data destination");
  run->add_option("--raw", run_opt.out_raw, "Per-trial raw log destination");
  // Overrides; command line wins over the config file.
  std::string ov_n_values, ov_algos, ov_rule;
  int ov_trials = -1, ov_oracle_limit = -1, ov_retries = -1;
  double ov_area = -1.0, ov_radius = -1.0;
  std::int64_t ov_seed = -1;
  int ov_include_oracle = -1, ov_timing = -1;
  run->add_option("--n-values", ov_n_values, "Comma list of node counts");
  run->add_option("--trials", ov_trials, "Trials per n");
  run->add_option("--area", ov_area, "Square side length");
  run->add_option("--radius", ov_radius, "Wireless range");
  run->add_option("--seed", ov_seed, "Base seed");
  run->add_option("--algos", ov_algos, "Comma list from mmcds,mcds1,mcds2,das");
  run->add_option("--mcds2-rule", ov_rule, "single or union");
  run->add_option("--include-oracle", ov_include_oracle, "1 adds exact-minimum rows for small n");
  run->add_option("--oracle-limit", ov_oracle_limit, "Largest n the oracle accepts");
  run->add_option("--retries", ov_retries, "Generation retry budget");
  run->add_option("--timing", ov_timing, "0 reports runtimes as 0 for byte-identical reruns");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      spec.require_connected = connected_flag;
      return cmd_gen(spec, out_stem);
    }
    if (solve->parsed()) return cmd_solve(graph_path, algo, mcds2_rule);
    if (oracle->parsed()) return cmd_oracle(oracle_graph, oracle_limit);
    if (run->parsed()) {
      return cmd_run(run_opt, [&](cds::ExperimentConfig& cfg) {
        if (!ov_n_values.empty()) {
          cfg.n_values.clear();
          std::istringstream in(ov_n_values);
          std::string item;
          while (std::getline(in, item, ','))
            if (!item.empty()) cfg.n_values.push_back(std::stoi(item));
        }
        if (ov_trials >= 0) cfg.trials = ov_trials;
        if (ov_area > 0.0) cfg.area_side = ov_area;
        if (ov_radius > 0.0) cfg.radius = ov_radius;
        if (ov_seed >= 0) cfg.base_seed = static_cast<std::uint64_t>(ov_seed);
        if (!ov_algos.empty()) {
          cfg.algorithms.clear();
          std::istringstream in(ov_algos);
          std::string item;
          while (std::getline(in, item, ','))
            if (!item.empty()) cfg.algorithms.push_back(item);
        }
        if (!ov_rule.empty()) cfg.mcds2_rule = cds::parse_mcds2_rule(ov_rule);
        if (ov_include_oracle >= 0) cfg.include_oracle = ov_include_oracle != 0;
        if (ov_oracle_limit >= 0) cfg.oracle_limit = ov_oracle_limit;
        if (ov_retries >= 0) cfg.max_retries = ov_retries;
        if (ov_timing >= 0) cfg.timing = ov_timing != 0;
      });
    }
  } catch (const cds::config_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cds::io_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const cds::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
