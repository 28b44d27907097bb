#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cds/graph.hpp"

namespace cds {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Node positions inside a square area plus the shared wireless range.
/// Immutable once generated; the seed that produced the points is kept so
/// files are self-describing.
struct GeometricTopology {
  std::vector<Point> points;
  double area_side = 0.0;
  double radius = 0.0;
  std::uint64_t seed = 0;
};

struct GenSpec {
  int n = 1;
  double area_side = 100.0;
  double radius = 25.0;
  std::uint64_t seed = 1;
  bool require_connected = true;
  int max_retries = 1000;
};

/// Draws n points i.i.d. uniformly over the square with SplitMix64; attempt k
/// seeds the generator with spec.seed + k (x before y, node 0 first). With
/// require_connected the draw repeats until the induced unit-disk graph is
/// connected; generation_error after max_retries attempts.
GeometricTopology generate(const GenSpec& spec);

/// Unit-disk graph: edge (u, v) iff the Euclidean distance is <= radius
/// (closed disk, compared on squared distances). Links are bidirectional.
Graph to_graph(const GeometricTopology& t);

// Topology text format: header line "n area_side radius seed", then n lines
// "id x y" with ids 0..n-1 in order and 9 fractional digits on every real
// value. '#' lines are ignored on load.
GeometricTopology load_topology(std::istream& in);
GeometricTopology load_topology_file(const std::string& path);
void save_topology(const GeometricTopology& t, std::ostream& out);
void save_topology_file(const GeometricTopology& t, const std::string& path);

}  // namespace cds
