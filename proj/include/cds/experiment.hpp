#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cds/algorithms.hpp"
#include "cds/graph.hpp"

namespace cds {

/// One benchmark run: which n values, how many trials each, the topology
/// regime, and which algorithms to compare on the shared per-trial graphs.
struct ExperimentConfig {
  std::vector<int> n_values = {20, 40, 60, 80, 100, 120, 140, 160, 180, 200};
  int trials = 30;
  double area_side = 100.0;
  double radius = 25.0;
  std::uint64_t base_seed = 1;
  std::vector<std::string> algorithms = {"mmcds", "mcds1", "mcds2", "das"};
  Mcds2Rule mcds2_rule = Mcds2Rule::single_neighbor;
  bool include_oracle = false;  // honored only for n <= oracle_limit
  int oracle_limit = 12;
  bool require_connected = true;
  int max_retries = 1000;
  bool timing = true;  // false reports runtimes as 0 for byte-identical reruns
};

/// Per-trial seed: base_seed ^ mix64(mix64(n) ^ trial). Depends only on
/// (base_seed, n, trial), so adding n values or trials never perturbs
/// existing trials.
std::uint64_t trial_seed(std::uint64_t base_seed, int n, int trial);

/// One algorithm invocation on one generated graph.
struct TrialRow {
  std::string algorithm;
  int n = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  std::uint64_t graph_hash = 0;
  int size = 0;
  bool valid = false;
  bool repaired = false;
  double runtime_us = 0.0;  // rounded to 6 decimals before aggregation
};

/// One aggregated comparison row: algorithm and n against size statistics.
struct ExperimentRecord {
  std::string algorithm;
  int n = 0;
  int trials = 0;
  double mean_size = 0.0;
  double stddev_size = 0.0;  // population standard deviation over trials
  int min_size = 0;
  int max_size = 0;
  double valid_fraction = 0.0;
  double repaired_fraction = 0.0;
  double mean_runtime_us = 0.0;
};

struct GenerationFailure {
  int n = 0;
  int trial = 0;
  std::string message;
};

struct ExperimentResult {
  std::vector<ExperimentRecord> records;  // ascending n, then algorithm name
  std::vector<TrialRow> raw;
  std::vector<GenerationFailure> failures;
};

/// Runs the experiment: per (n, trial) one topology is generated with
/// trial_seed and every selected algorithm runs on that same graph; outputs
/// are validated with check_cds and aggregated per (algorithm, n). A failed
/// generation is captured in failures and the run continues. Throws
/// config_error on invalid configuration before any work.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Groups raw rows by (n, algorithm) and computes the record statistics.
std::vector<ExperimentRecord> aggregate(const std::vector<TrialRow>& rows);

// CSV columns, in order: algorithm,n,trials,mean_size,stddev_size,min_size,
// max_size,valid_fraction,repaired_fraction,mean_runtime_us. Reals carry six
// fractional digits, lines end with LF.
void emit_csv(const std::vector<ExperimentRecord>& records, std::ostream& out);
void emit_csv_file(const std::vector<ExperimentRecord>& records,
                   const std::string& path);

// Plot data: per algorithm a "# name" line followed by "n mean_size" pairs
// ascending in n, blank line between blocks.
void emit_plot_data(const std::vector<ExperimentRecord>& records,
                    std::ostream& out);
void emit_plot_data_file(const std::vector<ExperimentRecord>& records,
                         const std::string& path);

// Raw per-trial log, one row per algorithm invocation.
void emit_raw(const std::vector<TrialRow>& rows, std::ostream& out);
void emit_raw_file(const std::vector<TrialRow>& rows, const std::string& path);

/// Parses a flat key=value config file ('#' comments allowed). Unknown keys
/// and malformed values are config_error. Keys: n_values, trials, area_side,
/// radius, base_seed, algorithms, mcds2_rule, include_oracle, oracle_limit,
/// require_connected, max_retries, timing.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config_file(const std::string& path);

/// Throws config_error unless cfg satisfies its invariants (n_values
/// nonempty ascending, trials >= 1, algorithms nonempty and known, ...).
void validate_config(const ExperimentConfig& cfg);

Mcds2Rule parse_mcds2_rule(const std::string& value);

}  // namespace cds
