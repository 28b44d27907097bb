#include "cds/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "cds/prng.hpp"
#include "cds/topology.hpp"
#include "cds/verify.hpp"

namespace cds {

std::uint64_t trial_seed(std::uint64_t base_seed, int n, int trial) {
  return base_seed ^ mix64(mix64(static_cast<std::uint64_t>(n)) ^
                           static_cast<std::uint64_t>(trial));
}

namespace {

const std::set<std::string>& known_algorithms() {
  static const std::set<std::string> names{"mmcds", "mcds1", "mcds2", "das"};
  return names;
}

double round6(double x) { return std::round(x * 1e6) / 1e6; }

std::string fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

}  // namespace

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.n_values.empty()) throw config_error("config: n_values must be nonempty");
  for (size_t i = 0; i < cfg.n_values.size(); ++i) {
    if (cfg.n_values[i] < 1) throw config_error("config: n values must be >= 1");
    if (i > 0 && cfg.n_values[i] <= cfg.n_values[i - 1])
      throw config_error("config: n_values must be strictly ascending");
  }
  if (cfg.trials < 1) throw config_error("config: trials must be >= 1");
  if (!(cfg.area_side > 0.0)) throw config_error("config: area_side must be positive");
  if (!(cfg.radius > 0.0)) throw config_error("config: radius must be positive");
  if (cfg.algorithms.empty()) throw config_error("config: algorithms must be nonempty");
  std::set<std::string> seen;
  for (const auto& name : cfg.algorithms) {
    if (!known_algorithms().count(name)) throw config_error("config: unknown algorithm '" + name + "'");
    if (!seen.insert(name).second) throw config_error("config: duplicate algorithm '" + name + "'");
  }
  if (cfg.oracle_limit < 1) throw config_error("config: oracle_limit must be >= 1");
  if (cfg.max_retries < 1) throw config_error("config: max_retries must be >= 1");
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  validate_config(cfg);
  ExperimentResult result;

  for (int n : cfg.n_values) {
    for (int trial = 0; trial < cfg.trials; ++trial) {
      const std::uint64_t seed = trial_seed(cfg.base_seed, n, trial);
      GenSpec spec;
      spec.n = n;
      spec.area_side = cfg.area_side;
      spec.radius = cfg.radius;
      spec.seed = seed;
      spec.require_connected = cfg.require_connected;
      spec.max_retries = cfg.max_retries;

      Graph g;
      try {
        g = to_graph(generate(spec));
      } catch (const generation_error& e) {
        result.failures.push_back({n, trial, e.what()});
        continue;
      }
      const std::uint64_t hash = graph_hash(g);

      // Paired comparison: every algorithm sees this same graph.
      for (const auto& name : cfg.algorithms) {
        CdsResult r = run_algorithm(g, name, cfg.mcds2_rule);
        TrialRow row;
        row.algorithm = name;
        row.n = n;
        row.trial = trial;
        row.seed = seed;
        row.graph_hash = hash;
        row.size = r.size;
        row.valid = check_cds(g, r.cds).valid();
        row.repaired = r.repaired;
        row.runtime_us = cfg.timing ? round6(r.wall_time.count()) : 0.0;
        result.raw.push_back(std::move(row));
      }

      if (cfg.include_oracle && n <= cfg.oracle_limit) {
        const auto t0 = std::chrono::steady_clock::now();
        OracleResult oracle = exact_min_cds(g, cfg.oracle_limit);
        const std::chrono::duration<double, std::micro> elapsed =
            std::chrono::steady_clock::now() - t0;
        TrialRow row;
        row.algorithm = "oracle";
        row.n = n;
        row.trial = trial;
        row.seed = seed;
        row.graph_hash = hash;
        row.size = oracle.min_size;
        row.valid = true;
        row.repaired = false;
        row.runtime_us = cfg.timing ? round6(elapsed.count()) : 0.0;
        result.raw.push_back(std::move(row));
      }
    }
  }

  result.records = aggregate(result.raw);
  return result;
}

std::vector<ExperimentRecord> aggregate(const std::vector<TrialRow>& rows) {
  std::map<std::pair<int, std::string>, std::vector<const TrialRow*>> groups;
  for (const auto& row : rows) groups[{row.n, row.algorithm}].push_back(&row);

  std::vector<ExperimentRecord> records;
  records.reserve(groups.size());
  for (const auto& [key, group] : groups) {
    ExperimentRecord rec;
    rec.n = key.first;
    rec.algorithm = key.second;
    rec.trials = static_cast<int>(group.size());
    rec.min_size = group.front()->size;
    rec.max_size = group.front()->size;
    double sum = 0.0, runtime_sum = 0.0;
    int valid = 0, repaired = 0;
    for (const TrialRow* row : group) {
      sum += row->size;
      runtime_sum += row->runtime_us;
      rec.min_size = std::min(rec.min_size, row->size);
      rec.max_size = std::max(rec.max_size, row->size);
      if (row->valid) ++valid;
      if (row->repaired) ++repaired;
    }
    rec.mean_size = sum / rec.trials;
    double sq = 0.0;
    for (const TrialRow* row : group) {
      const double d = row->size - rec.mean_size;
      sq += d * d;
    }
    rec.stddev_size = std::sqrt(sq / rec.trials);
    rec.valid_fraction = static_cast<double>(valid) / rec.trials;
    rec.repaired_fraction = static_cast<double>(repaired) / rec.trials;
    rec.mean_runtime_us = runtime_sum / rec.trials;
    records.push_back(std::move(rec));
  }
  // std::map ordering already gives ascending n, then algorithm name.
  return records;
}

void emit_csv(const std::vector<ExperimentRecord>& records, std::ostream& out) {
  out << "algorithm,n,trials,mean_size,stddev_size,min_size,max_size,"
         "valid_fraction,repaired_fraction,mean_runtime_us\n";
  for (const auto& r : records) {
    out << r.algorithm << ',' << r.n << ',' << r.trials << ',' << fixed6(r.mean_size) << ','
        << fixed6(r.stddev_size) << ',' << r.min_size << ',' << r.max_size << ','
        << fixed6(r.valid_fraction) << ',' << fixed6(r.repaired_fraction) << ','
        << fixed6(r.mean_runtime_us) << '\n';
  }
}

void emit_plot_data(const std::vector<ExperimentRecord>& records, std::ostream& out) {
  std::vector<std::string> names;
  for (const auto& r : records)
    if (std::find(names.begin(), names.end(), r.algorithm) == names.end())
      names.push_back(r.algorithm);
  std::sort(names.begin(), names.end());

  bool first = true;
  for (const auto& name : names) {
    if (!first) out << '\n';
    first = false;
    out << "# " << name << '\n';
    for (const auto& r : records)
      if (r.algorithm == name) out << r.n << ' ' << fixed6(r.mean_size) << '\n';
  }
}

void emit_raw(const std::vector<TrialRow>& rows, std::ostream& out) {
  out << "algorithm,n,trial,seed,graph_hash,size,valid,repaired,runtime_us\n";
  for (const auto& row : rows) {
    out << row.algorithm << ',' << row.n << ',' << row.trial << ',' << row.seed << ','
        << row.graph_hash << ',' << row.size << ',' << (row.valid ? 1 : 0) << ','
        << (row.repaired ? 1 : 0) << ',' << fixed6(row.runtime_us) << '\n';
  }
}

namespace {

void emit_to_file(const std::string& path, const char* what,
                  const std::function<void(std::ostream&)>& write) {
  std::ofstream out(path);
  if (!out) throw io_error(std::string("cannot open for writing: ") + path);
  write(out);
  if (!out.good()) throw io_error(std::string(what) + " write failed: " + path);
}

}  // namespace

void emit_csv_file(const std::vector<ExperimentRecord>& records, const std::string& path) {
  emit_to_file(path, "csv", [&](std::ostream& out) { emit_csv(records, out); });
}

void emit_plot_data_file(const std::vector<ExperimentRecord>& records, const std::string& path) {
  emit_to_file(path, "plot data", [&](std::ostream& out) { emit_plot_data(records, out); });
}

void emit_raw_file(const std::vector<TrialRow>& rows, const std::string& path) {
  emit_to_file(path, "raw log", [&](std::ostream& out) { emit_raw(rows, out); });
}

namespace {

std::string trim(const std::string& s) {
  const size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

long long parse_int(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    long long v = std::stoll(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw config_error("config: bad integer for " + key + ": '" + value + "'");
  }
}

double parse_real(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw config_error("config: bad number for " + key + ": '" + value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw config_error("config: bad boolean for " + key + ": '" + value + "'");
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    std::uint64_t v = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw config_error("config: bad seed for " + key + ": '" + value + "'");
  }
}

}  // namespace

Mcds2Rule parse_mcds2_rule(const std::string& value) {
  if (value == "single") return Mcds2Rule::single_neighbor;
  if (value == "union") return Mcds2Rule::neighbor_union;
  throw config_error("config: mcds2_rule must be 'single' or 'union', got '" + value + "'");
}

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    const size_t eq = text.find('=');
    if (eq == std::string::npos)
      throw config_error("config line " + std::to_string(line_no) + ": expected key=value");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));

    if (key == "n_values") {
      cfg.n_values.clear();
      for (const auto& item : split_commas(value))
        cfg.n_values.push_back(static_cast<int>(parse_int(key, item)));
    } else if (key == "trials") {
      cfg.trials = static_cast<int>(parse_int(key, value));
    } else if (key == "area_side") {
      cfg.area_side = parse_real(key, value);
    } else if (key == "radius") {
      cfg.radius = parse_real(key, value);
    } else if (key == "base_seed") {
      cfg.base_seed = parse_u64(key, value);
    } else if (key == "algorithms") {
      cfg.algorithms = split_commas(value);
    } else if (key == "mcds2_rule") {
      cfg.mcds2_rule = parse_mcds2_rule(value);
    } else if (key == "include_oracle") {
      cfg.include_oracle = parse_bool(key, value);
    } else if (key == "oracle_limit") {
      cfg.oracle_limit = static_cast<int>(parse_int(key, value));
    } else if (key == "require_connected") {
      cfg.require_connected = parse_bool(key, value);
    } else if (key == "max_retries") {
      cfg.max_retries = static_cast<int>(parse_int(key, value));
    } else if (key == "timing") {
      cfg.timing = parse_bool(key, value);
    } else {
      throw config_error("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open config file: " + path);
  return parse_config(in);
}

}  // namespace cds
