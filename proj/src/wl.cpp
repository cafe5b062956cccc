#include "wlcc/wl.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include <omp.h>

#include "wlcc/errors.hpp"

namespace wlcc {

namespace detail {

// Shared by both step implementations: metadata of refined colors is
// inherited from the parent color, inverse pairing read off the matrix.
Configuration assemble_refined(const Configuration& old, std::vector<Color> colors,
                               std::size_t count) {
  const std::size_t m = old.size();
  std::vector<std::size_t> representative(count, m * m);
  for (std::size_t cell = 0; cell < m * m; ++cell)
    if (representative[colors[cell]] == m * m) representative[colors[cell]] = cell;
  ColorTable table(count);
  for (std::size_t c = 0; c < count; ++c) {
    const std::size_t cell = representative[c];
    const std::size_t v1 = cell / m;
    const std::size_t v2 = cell % m;
    const ColorInfo& parent = old.info(old.colors()[cell]);
    table[c].is_vertex = parent.is_vertex;
    table[c].empty_lineage = parent.empty_lineage;
    table[c].origin = parent.origin;
    table[c].inverse = colors[v2 * m + v1];
  }
  Configuration next(m, std::move(colors), std::move(table), old.iteration() + 1);
  if (auto v = find_violation(next))
    throw Error(ErrorKind::InvalidConfiguration,
                "refinement broke condition " + std::to_string(v->condition) + ": " +
                    v->detail);
  return next;
}

void require_valid(const Configuration& config) {
  if (auto v = find_violation(config))
    throw Error(ErrorKind::InvalidConfiguration,
                "condition " + std::to_string(v->condition) + " fails at (" +
                    std::to_string(v->v1) + "," + std::to_string(v->v2) + "): " + v->detail);
}

}  // namespace detail

std::size_t class_count(const Configuration& config) {
  std::vector<bool> used(config.color_count(), false);
  for (Color c : config.colors()) used[c] = true;
  return static_cast<std::size_t>(std::count(used.begin(), used.end(), true));
}

StepResult wl_step(const Configuration& config) {
  detail::require_valid(config);
  const std::size_t m = config.size();
  const std::uint64_t palette = config.color_count();
  const auto& c = config.colors();

  std::vector<Color> transposed(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) transposed[j * m + i] = c[i * m + j];

  // Flattened signature: old color, then alternating (c1 * palette + c2, count).
  std::vector<std::vector<std::uint64_t>> signatures(m * m);
  const auto rows = static_cast<long long>(m);
#pragma omp parallel
  {
    std::vector<std::uint64_t> keys(m);
#pragma omp for schedule(dynamic, 1)
    for (long long v1 = 0; v1 < rows; ++v1) {
      const Color* row = c.data() + v1 * m;
      for (std::size_t v2 = 0; v2 < m; ++v2) {
        const Color* col = transposed.data() + v2 * m;
        for (std::size_t w = 0; w < m; ++w) keys[w] = row[w] * palette + col[w];
        std::sort(keys.begin(), keys.end());
        auto& sig = signatures[v1 * m + v2];
        sig.reserve(1 + 2 * m);
        sig.push_back(row[v2]);
        for (std::size_t i = 0; i < m;) {
          std::size_t j = i;
          while (j < m && keys[j] == keys[i]) ++j;
          sig.push_back(keys[i]);
          sig.push_back(j - i);
          i = j;
        }
        sig.shrink_to_fit();
      }
    }
  }

  std::vector<std::uint32_t> order(m * m);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return signatures[a] < signatures[b];
  });
  std::vector<Color> colors(m * m);
  Color next = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && signatures[order[i]] != signatures[order[i - 1]]) ++next;
    colors[order[i]] = next;
  }
  const std::size_t count = m == 0 ? 0 : next + 1;
  const bool refined = count > class_count(config);
  return {detail::assemble_refined(config, std::move(colors), count), refined};
}

WLTrace wl_run(const Configuration& config, const WLOptions& options) {
  detail::require_valid(config);
  const std::size_t m = config.size();
  const std::size_t cap = options.max_iter.value_or(std::max<std::size_t>(m * m, 1));
  WLTrace trace;
  trace.complete = options.keep_snapshots;
  trace.snapshots.push_back(config);
  trace.class_counts.push_back(class_count(config));
  Configuration current = config;
  while (true) {
    StepResult step = options.serial ? wl_step_serial(current) : wl_step(current);
    trace.class_counts.push_back(class_count(step.config));
    if (!step.refined) {
      trace.snapshots.push_back(std::move(step.config));
      break;
    }
    ++trace.wl_count;
    if (static_cast<std::size_t>(trace.wl_count) > cap)
      throw Error(ErrorKind::IterationCapExceeded,
                  "no fixpoint after " + std::to_string(cap) + " refining steps");
    current = std::move(step.config);
    if (options.keep_snapshots) trace.snapshots.push_back(current);
  }
  if (!options.keep_snapshots && trace.snapshots.size() > 2)
    trace.snapshots.erase(trace.snapshots.begin() + 1, trace.snapshots.end() - 1);
  return trace;
}

Color color_at(const WLTrace& trace, std::size_t h, Vertex v1, Vertex v2) {
  if (h >= trace.snapshots.size())
    throw Error(ErrorKind::OutOfRange, "iteration " + std::to_string(h) +
                                           " not in trace of length " +
                                           std::to_string(trace.snapshots.size()));
  const auto& config = trace.snapshots[h];
  if (v1 >= config.size() || v2 >= config.size())
    throw Error(ErrorKind::OutOfRange, "vertex outside configuration");
  return config.at(v1, v2);
}

bool partition_equal(const Configuration& a, const Configuration& b) {
  if (a.size() != b.size())
    throw Error(ErrorKind::SizeMismatch, "configurations have " + std::to_string(a.size()) +
                                             " and " + std::to_string(b.size()) + " vertices");
  constexpr Color kUnset = ~Color{0};
  std::vector<Color> forward(a.color_count(), kUnset);
  std::vector<Color> backward(b.color_count(), kUnset);
  for (std::size_t cell = 0; cell < a.colors().size(); ++cell) {
    const Color ca = a.colors()[cell];
    const Color cb = b.colors()[cell];
    if (forward[ca] == kUnset) forward[ca] = cb;
    if (backward[cb] == kUnset) backward[cb] = ca;
    if (forward[ca] != cb || backward[cb] != ca) return false;
  }
  return true;
}

}  // namespace wlcc
