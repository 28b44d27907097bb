#include "cds/topology.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "cds/prng.hpp"

namespace cds {

namespace {

std::vector<Point> draw_points(int n, double area_side, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Point> points(static_cast<size_t>(n));
  for (auto& p : points) {
    p.x = rng.uniform01() * area_side;
    p.y = rng.uniform01() * area_side;
  }
  return points;
}

}  // namespace

GeometricTopology generate(const GenSpec& spec) {
  if (spec.n < 1) throw precondition_error("generate: n must be >= 1");
  if (!(spec.area_side > 0.0)) throw precondition_error("generate: area_side must be positive");
  if (!(spec.radius > 0.0)) throw precondition_error("generate: radius must be positive");
  if (spec.max_retries < 1) throw precondition_error("generate: max_retries must be >= 1");

  GeometricTopology topo;
  topo.area_side = spec.area_side;
  topo.radius = spec.radius;
  topo.seed = spec.seed;

  // Attempt k reseeds the generator with seed + k, so the whole retry
  // sequence is a function of the GenSpec fields alone.
  for (int attempt = 0; attempt < spec.max_retries; ++attempt) {
    topo.points = draw_points(spec.n, spec.area_side, spec.seed + static_cast<std::uint64_t>(attempt));
    if (!spec.require_connected) return topo;
    if (is_connected(to_graph(topo))) return topo;
  }
  throw generation_error("generate: no connected layout after " +
                         std::to_string(spec.max_retries) + " attempts (n=" +
                         std::to_string(spec.n) + ", radius=" + std::to_string(spec.radius) +
                         ", area_side=" + std::to_string(spec.area_side) + ")");
}

Graph to_graph(const GeometricTopology& t) {
  const int n = static_cast<int>(t.points.size());
  const double r2 = t.radius * t.radius;
  std::vector<std::pair<NodeId, NodeId>> edge_list;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const double dx = t.points[static_cast<size_t>(u)].x - t.points[static_cast<size_t>(v)].x;
      const double dy = t.points[static_cast<size_t>(u)].y - t.points[static_cast<size_t>(v)].y;
      if (dx * dx + dy * dy <= r2) edge_list.emplace_back(u, v);
    }
  }
  return Graph(n, edge_list);
}

namespace {

bool next_data_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    return true;
  }
  return false;
}

std::string fixed9(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9f", value);
  return buf;
}

}  // namespace

GeometricTopology load_topology(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_data_line(in, line, line_no)) throw io_error("topology file: missing header line");
  std::istringstream header(line);
  long long n = 0;
  GeometricTopology topo;
  std::string extra;
  if (!(header >> n >> topo.area_side >> topo.radius >> topo.seed) || (header >> extra))
    throw io_error("topology file line " + std::to_string(line_no) +
                   ": header must be 'n area_side radius seed'");
  if (n < 1) throw io_error("topology file: n must be >= 1");
  if (!(topo.area_side > 0.0) || !(topo.radius > 0.0))
    throw io_error("topology file: area_side and radius must be positive");

  topo.points.resize(static_cast<size_t>(n));
  for (long long i = 0; i < n; ++i) {
    if (!next_data_line(in, line, line_no))
      throw io_error("topology file: expected " + std::to_string(n) + " points, got " +
                     std::to_string(i));
    std::istringstream row(line);
    long long id = 0;
    Point p;
    if (!(row >> id >> p.x >> p.y) || (row >> extra))
      throw io_error("topology file line " + std::to_string(line_no) + ": point must be 'id x y'");
    if (id != i)
      throw io_error("topology file line " + std::to_string(line_no) + ": ids must run 0.." +
                     std::to_string(n - 1) + " in order");
    if (p.x < 0.0 || p.x > topo.area_side || p.y < 0.0 || p.y > topo.area_side)
      throw io_error("topology file line " + std::to_string(line_no) + ": point outside area");
    topo.points[static_cast<size_t>(i)] = p;
  }
  if (next_data_line(in, line, line_no))
    throw io_error("topology file line " + std::to_string(line_no) + ": unexpected trailing data");
  return topo;
}

GeometricTopology load_topology_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open topology file: " + path);
  return load_topology(in);
}

void save_topology(const GeometricTopology& t, std::ostream& out) {
  out << t.points.size() << ' ' << fixed9(t.area_side) << ' ' << fixed9(t.radius) << ' '
      << t.seed << '\n';
  for (size_t i = 0; i < t.points.size(); ++i)
    out << i << ' ' << fixed9(t.points[i].x) << ' ' << fixed9(t.points[i].y) << '\n';
}

void save_topology_file(const GeometricTopology& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open for writing: " + path);
  save_topology(t, out);
  if (!out.good()) throw io_error("write failed: " + path);
}

}  // namespace cds
