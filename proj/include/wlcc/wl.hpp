#pragma once

// Two-dimensional Weisfeiler-Leman refinement of configurations.
//
// One step replaces the color of every ordered pair (v1, v2) by its signature:
// the old color followed by the sparse, sorted list of ((c1, c2), count) where
// count is the number of w with c(v1, w) = c1 and c(w, v2) = c2. Signatures
// are sorted lexicographically and renumbered densely, so color ids are
// canonical and independent of thread count.

#include <cstddef>
#include <optional>
#include <vector>

#include "wlcc/configuration.hpp"

namespace wlcc {

struct StepResult {
  Configuration config;
  bool refined = false;
};

// OpenMP kernel: signatures are computed row-parallel, renumbering is a
// serial barrier.
StepResult wl_step(const Configuration& config);

// Single-threaded reference with map-based signature interning. Produces
// results identical to wl_step, color ids included.
StepResult wl_step_serial(const Configuration& config);

// Number of distinct color ids present in the matrix.
std::size_t class_count(const Configuration& config);

struct WLOptions {
  // Defaults to m^2.
  std::optional<std::size_t> max_iter;
  // When false only the initial and final configurations are retained.
  bool keep_snapshots = true;
  bool serial = false;
};

struct WLTrace {
  // With keep_snapshots: snapshot h is the configuration after h steps, the
  // last one produced by the first non-refining step (same partition as its
  // predecessor).
  std::vector<Configuration> snapshots;
  // One entry per executed step plus the initial configuration.
  std::vector<std::size_t> class_counts;
  // Number of steps that strictly refined the partition.
  int wl_count = 0;
  bool complete = true;

  const Configuration& initial() const { return snapshots.front(); }
  const Configuration& final() const { return snapshots.back(); }
};

// Iterates to the first non-refining step. Throws IterationCapExceeded when
// max_iter refining steps do not reach a fixpoint.
WLTrace wl_run(const Configuration& config, const WLOptions& options = {});

// Color of (v1, v2) in snapshot h; OutOfRange for bad indices.
Color color_at(const WLTrace& trace, std::size_t h, Vertex v1, Vertex v2);

// True iff both colorings induce the same partition of the pairs.
bool partition_equal(const Configuration& a, const Configuration& b);

}  // namespace wlcc
