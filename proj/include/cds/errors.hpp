#pragma once

#include <stdexcept>

namespace cds {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A node id outside [0, node_count).
struct invalid_node_error : error {
  using error::error;
};

/// Input violates an operation's stated preconditions (disconnected graph,
/// invalid CDS, empty graph, ...).
struct precondition_error : error {
  using error::error;
};

/// Topology generation exhausted its retry budget.
struct generation_error : error {
  using error::error;
};

/// File reading, writing, or format violations.
struct io_error : error {
  using error::error;
};

/// Malformed or inconsistent experiment configuration.
struct config_error : error {
  using error::error;
};

/// An approximation reported a smaller size than the exact optimum.
struct oracle_violation_error : error {
  using error::error;
};

/// Graph too large for exhaustive search.
struct too_large_error : error {
  using error::error;
};

}  // namespace cds
