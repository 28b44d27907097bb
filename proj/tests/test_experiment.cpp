#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "cds/experiment.hpp"
#include "cds/prng.hpp"

using namespace cds;

namespace {

TrialRow make_row(const std::string& algo, int n, int trial, int size, bool valid = true,
                  bool repaired = false, double runtime = 0.0) {
  TrialRow row;
  row.algorithm = algo;
  row.n = n;
  row.trial = trial;
  row.size = size;
  row.valid = valid;
  row.repaired = repaired;
  row.runtime_us = runtime;
  return row;
}

ExperimentConfig tiny_config() {
  ExperimentConfig cfg;
  cfg.n_values = {12, 16};
  cfg.trials = 4;
  cfg.radius = 45.0;
  cfg.base_seed = 7;
  cfg.timing = false;
  return cfg;
}

}  // namespace

TEST_CASE("trial_seed is stable and collision-free over the grid") {
  // Frozen values guard the documented mixing formula:
  // base ^ mix64(mix64(n) ^ trial).
  CHECK(trial_seed(1, 20, 0) == (1ULL ^ mix64(mix64(20ULL) ^ 0ULL)));
  CHECK(trial_seed(99, 60, 7) == (99ULL ^ mix64(mix64(60ULL) ^ 7ULL)));

  std::set<std::uint64_t> seen;
  for (int n = 10; n <= 200; n += 10)
    for (int t = 0; t < 50; ++t) seen.insert(trial_seed(1, n, t));
  CHECK(seen.size() == 20u * 50u);

  // Adding trials or n values never perturbs existing trials.
  CHECK(trial_seed(1, 20, 3) == trial_seed(1, 20, 3));
}

TEST_CASE("aggregate arithmetic") {
  std::vector<TrialRow> rows{make_row("mcds1", 20, 0, 3), make_row("mcds1", 20, 1, 5)};
  auto records = aggregate(rows);
  REQUIRE(records.size() == 1);
  const auto& r = records.front();
  CHECK(r.algorithm == "mcds1");
  CHECK(r.n == 20);
  CHECK(r.trials == 2);
  CHECK(r.mean_size == doctest::Approx(4.0));
  CHECK(r.stddev_size == doctest::Approx(1.0));  // population stddev of {3, 5}
  CHECK(r.min_size == 3);
  CHECK(r.max_size == 5);
  CHECK(r.valid_fraction == doctest::Approx(1.0));
}

TEST_CASE("aggregate orders records by n then algorithm name") {
  std::vector<TrialRow> rows{
      make_row("mmcds", 40, 0, 4), make_row("das", 40, 0, 5),
      make_row("mmcds", 20, 0, 3), make_row("das", 20, 0, 3),
  };
  auto records = aggregate(rows);
  REQUIRE(records.size() == 4);
  CHECK(records[0].n == 20);
  CHECK(records[0].algorithm == "das");
  CHECK(records[1].algorithm == "mmcds");
  CHECK(records[2].n == 40);
  CHECK(records[2].algorithm == "das");
}

TEST_CASE("emit_csv formatting") {
  std::ostringstream empty;
  emit_csv({}, empty);
  CHECK(empty.str() ==
        "algorithm,n,trials,mean_size,stddev_size,min_size,max_size,"
        "valid_fraction,repaired_fraction,mean_runtime_us\n");

  ExperimentRecord rec;
  rec.algorithm = "mcds1";
  rec.n = 20;
  rec.trials = 2;
  rec.mean_size = 4.0;
  rec.stddev_size = 1.0;
  rec.min_size = 3;
  rec.max_size = 5;
  rec.valid_fraction = 1.0;
  rec.repaired_fraction = 0.0;
  rec.mean_runtime_us = 12.5;
  std::ostringstream one;
  emit_csv({rec}, one);
  CHECK(one.str() ==
        "algorithm,n,trials,mean_size,stddev_size,min_size,max_size,"
        "valid_fraction,repaired_fraction,mean_runtime_us\n"
        "mcds1,20,2,4.000000,1.000000,3,5,1.000000,0.000000,12.500000\n");
}

TEST_CASE("emit_plot_data formatting") {
  std::ostringstream empty;
  emit_plot_data({}, empty);
  CHECK(empty.str().empty());

  ExperimentRecord a;
  a.algorithm = "das";
  a.n = 20;
  a.mean_size = 3.5;
  ExperimentRecord b = a;
  b.n = 40;
  b.mean_size = 6.0;
  ExperimentRecord c = a;
  c.algorithm = "mmcds";
  c.mean_size = 3.0;
  std::ostringstream out;
  emit_plot_data({a, b, c}, out);
  CHECK(out.str() ==
        "# das\n20 3.500000\n40 6.000000\n"
        "\n# mmcds\n20 3.000000\n");
}

TEST_CASE("config validation") {
  ExperimentConfig cfg;
  cfg.algorithms.clear();
  CHECK_THROWS_AS(validate_config(cfg), config_error);

  cfg = ExperimentConfig{};
  cfg.n_values = {40, 20};
  CHECK_THROWS_AS(validate_config(cfg), config_error);

  cfg = ExperimentConfig{};
  cfg.algorithms = {"mmcds", "bogus"};
  CHECK_THROWS_AS(validate_config(cfg), config_error);

  cfg = ExperimentConfig{};
  cfg.trials = 0;
  CHECK_THROWS_AS(validate_config(cfg), config_error);

  CHECK_THROWS_AS(run_experiment([] {
                    ExperimentConfig c;
                    c.algorithms.clear();
                    return c;
                  }()),
                  config_error);
}

TEST_CASE("config file parsing") {
  std::istringstream in(
      "# comment\n"
      "n_values = 10, 20, 30\n"
      "trials=5\n"
      "radius = 30.5\n"
      "base_seed = 42\n"
      "algorithms = mmcds, das\n"
      "mcds2_rule = union\n"
      "include_oracle = true\n"
      "timing = false\n");
  auto cfg = parse_config(in);
  CHECK(cfg.n_values == std::vector<int>{10, 20, 30});
  CHECK(cfg.trials == 5);
  CHECK(cfg.radius == doctest::Approx(30.5));
  CHECK(cfg.base_seed == 42);
  CHECK(cfg.algorithms == std::vector<std::string>{"mmcds", "das"});
  CHECK(cfg.mcds2_rule == Mcds2Rule::neighbor_union);
  CHECK(cfg.include_oracle);
  CHECK_FALSE(cfg.timing);

  auto parse_text = [](const std::string& text) {
    std::istringstream s(text);
    return parse_config(s);
  };
  CHECK_THROWS_AS(parse_text("bogus_key = 1\n"), config_error);
  CHECK_THROWS_AS(parse_text("trials\n"), config_error);
  CHECK_THROWS_AS(parse_text("trials = abc\n"), config_error);
  CHECK_THROWS_AS(parse_text("mcds2_rule = both\n"), config_error);
}

TEST_CASE("run_experiment is deterministic and paired") {
  auto cfg = tiny_config();
  auto first = run_experiment(cfg);
  auto second = run_experiment(cfg);

  REQUIRE(first.raw.size() == second.raw.size());
  for (size_t i = 0; i < first.raw.size(); ++i) {
    CHECK(first.raw[i].size == second.raw[i].size);
    CHECK(first.raw[i].graph_hash == second.raw[i].graph_hash);
    CHECK(first.raw[i].seed == second.raw[i].seed);
  }

  std::ostringstream csv_a, csv_b, plot_a, plot_b;
  emit_csv(first.records, csv_a);
  emit_csv(second.records, csv_b);
  emit_plot_data(first.records, plot_a);
  emit_plot_data(second.records, plot_b);
  CHECK(csv_a.str() == csv_b.str());
  CHECK(plot_a.str() == plot_b.str());

  // Paired comparison: within one (n, trial) every algorithm saw the same
  // graph hash.
  std::map<std::pair<int, int>, std::set<std::uint64_t>> hashes;
  for (const auto& row : first.raw) hashes[{row.n, row.trial}].insert(row.graph_hash);
  for (const auto& [key, set] : hashes) CHECK(set.size() == 1);

  // Row and record counts match the grid.
  CHECK(first.raw.size() == cfg.n_values.size() * cfg.trials * cfg.algorithms.size());
  CHECK(first.records.size() == cfg.n_values.size() * cfg.algorithms.size());
  CHECK(first.failures.empty());
}

TEST_CASE("record invariants hold on a real run") {
  auto cfg = tiny_config();
  cfg.include_oracle = true;
  cfg.oracle_limit = 12;  // only the n=12 rows gain oracle entries
  auto result = run_experiment(cfg);
  CHECK(result.records.size() == cfg.n_values.size() * cfg.algorithms.size() + 1);
  for (const auto& rec : result.records) {
    CHECK(rec.valid_fraction == doctest::Approx(1.0));
    CHECK(rec.mean_size >= rec.min_size);
    CHECK(rec.mean_size <= rec.max_size);
    CHECK(rec.trials == cfg.trials);
  }
}

TEST_CASE("aggregates are recomputable from the raw log") {
  auto cfg = tiny_config();
  cfg.timing = true;
  auto result = run_experiment(cfg);
  std::ostringstream raw_out;
  emit_raw(result.raw, raw_out);

  // Parse the emitted raw log back and re-aggregate.
  std::istringstream in(raw_out.str());
  std::string line;
  std::getline(in, line);  // header
  std::vector<TrialRow> parsed;
  while (std::getline(in, line)) {
    TrialRow row;
    char comma;
    std::istringstream fields(line);
    std::getline(fields, row.algorithm, ',');
    int valid_int = 0, repaired_int = 0;
    fields >> row.n >> comma >> row.trial >> comma >> row.seed >> comma >> row.graph_hash >>
        comma >> row.size >> comma >> valid_int >> comma >> repaired_int >> comma >>
        row.runtime_us;
    row.valid = valid_int != 0;
    row.repaired = repaired_int != 0;
    parsed.push_back(row);
  }
  REQUIRE(parsed.size() == result.raw.size());

  std::ostringstream direct, recomputed;
  emit_csv(result.records, direct);
  emit_csv(aggregate(parsed), recomputed);
  CHECK(direct.str() == recomputed.str());
}

TEST_CASE("generation failures are captured and the run continues") {
  ExperimentConfig cfg;
  cfg.n_values = {30};
  cfg.trials = 2;
  cfg.radius = 0.4;  // cannot connect
  cfg.max_retries = 3;
  cfg.timing = false;
  auto result = run_experiment(cfg);
  CHECK(result.failures.size() == 2);
  CHECK(result.raw.empty());
  CHECK(result.records.empty());
}
