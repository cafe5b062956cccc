#include "wlcc/analysis.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include <omp.h>

#include "wlcc/errors.hpp"

namespace wlcc {

std::vector<Color> nonempty_colors(const Configuration& config) {
  const std::size_t m = config.size();
  std::vector<bool> nonempty(config.color_count(), true);
  std::vector<std::uint32_t> seen_in_row(config.color_count(), 0);
  // seen_in_row[c] holds (row + 1) when c was already met in the current row.
  for (Vertex v = 0; v < m; ++v)
    for (Vertex w = 0; w < m; ++w) {
      const Color c = config.at(v, w);
      if (seen_in_row[c] == v + 1) nonempty[c] = false;
      seen_in_row[c] = v + 1;
    }
  std::vector<bool> present(config.color_count(), false);
  for (Color c : config.colors()) present[c] = true;
  std::vector<Color> result;
  for (Color c = 0; c < config.color_count(); ++c)
    if (present[c] && nonempty[c] && !config.info(c).is_vertex) result.push_back(c);
  return result;
}

std::size_t GammaGraph::arc_count() const {
  std::size_t total = 0;
  for (const auto& o : out) total += o.size();
  return total;
}

namespace {

template <typename Keep>
GammaGraph arcs_where(const Configuration& config, Keep keep) {
  GammaGraph g;
  g.m = config.size();
  g.out.resize(g.m);
  g.out_colors.resize(g.m);
  for (Vertex v = 0; v < g.m; ++v)
    for (Vertex w = 0; w < g.m; ++w) {
      if (v == w) continue;
      const Color c = config.at(v, w);
      if (keep(c)) {
        g.out[v].push_back(w);
        g.out_colors[v].push_back(c);
      }
    }
  return g;
}

}  // namespace

GammaGraph gamma_graph(const Configuration& config) {
  std::vector<bool> keep(config.color_count(), false);
  for (Color c : nonempty_colors(config)) keep[c] = true;
  return arcs_where(config, [&](Color c) { return keep[c]; });
}

GammaGraph generator_graph(const Configuration& config) {
  return arcs_where(config, [&](Color c) {
    return !config.info(c).empty_lineage && !config.info(c).is_vertex;
  });
}

DistanceTable all_pairs_distances(const GammaGraph& graph) {
  const std::size_t m = graph.m;
  std::vector<int> d(m * m, DistanceTable::kUnreachable);
  const auto sources = static_cast<long long>(m);
#pragma omp parallel
  {
    std::vector<Vertex> queue(m);
#pragma omp for schedule(dynamic, 4)
    for (long long s = 0; s < sources; ++s) {
      int* row = d.data() + s * m;
      std::size_t head = 0;
      std::size_t tail = 0;
      row[s] = 0;
      queue[tail++] = static_cast<Vertex>(s);
      while (head < tail) {
        const Vertex v = queue[head++];
        for (Vertex w : graph.out[v])
          if (row[w] == DistanceTable::kUnreachable) {
            row[w] = row[v] + 1;
            queue[tail++] = w;
          }
      }
    }
  }
  return DistanceTable(m, std::move(d));
}

int diameter(const DistanceTable& distances) {
  int best = 0;
  for (Vertex u = 0; u < distances.size(); ++u)
    for (Vertex v = 0; v < distances.size(); ++v) {
      const int d = distances.at(u, v);
      if (d == DistanceTable::kUnreachable)
        throw Error(ErrorKind::Disconnected, "no path from " + std::to_string(u) +
                                                 " to " + std::to_string(v));
      best = std::max(best, d);
    }
  return best;
}

int diameter(const GammaGraph& graph) { return diameter(all_pairs_distances(graph)); }

AntipodeReport antipodes(const DistanceTable& distances) {
  AntipodeReport report;
  report.diameter = diameter(distances);
  report.antipodes.resize(distances.size());
  report.unique = true;
  for (Vertex u = 0; u < distances.size(); ++u) {
    for (Vertex v = 0; v < distances.size(); ++v)
      if (distances.at(u, v) == report.diameter) report.antipodes[u].push_back(v);
    if (report.antipodes[u].size() != 1) report.unique = false;
  }
  return report;
}

bool antipode_unique(const GammaGraph& graph) {
  return antipodes(all_pairs_distances(graph)).unique;
}

std::optional<ConfigViolation> check_configuration(const Configuration& config) {
  return find_violation(config);
}

std::uint64_t CoherenceCertificate::at(Color c0, Color c1, Color c2) const {
  auto it = gamma.find({c0, c1, c2});
  return it == gamma.end() ? 0 : it->second;
}

namespace {

// Sparse sorted ((c1 * palette + c2), count) list for one pair.
void triple_counts(const Configuration& config, const std::vector<Color>& transposed,
                   Vertex v1, Vertex v2, std::vector<std::uint64_t>& keys,
                   std::vector<std::pair<std::uint64_t, std::uint64_t>>& out) {
  const std::size_t m = config.size();
  const std::uint64_t palette = config.color_count();
  const Color* row = config.colors().data() + v1 * m;
  const Color* col = transposed.data() + v2 * m;
  for (std::size_t w = 0; w < m; ++w) keys[w] = row[w] * palette + col[w];
  std::sort(keys.begin(), keys.end());
  out.clear();
  for (std::size_t i = 0; i < m;) {
    std::size_t j = i;
    while (j < m && keys[j] == keys[i]) ++j;
    out.emplace_back(keys[i], j - i);
    i = j;
  }
}

}  // namespace

CoherenceResult check_coherent(const Configuration& config) {
  if (auto v = find_violation(config))
    throw Error(ErrorKind::InvalidConfiguration,
                "not a configuration (condition " + std::to_string(v->condition) + ")");
  const std::size_t m = config.size();
  const std::uint64_t palette = config.color_count();
  std::vector<Color> transposed(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) transposed[j * m + i] = config.at(i, j);

  using Sparse = std::vector<std::pair<std::uint64_t, std::uint64_t>>;
  std::vector<std::size_t> rep(palette, m * m);
  for (std::size_t cell = 0; cell < m * m; ++cell)
    if (rep[config.colors()[cell]] == m * m) rep[config.colors()[cell]] = cell;
  std::vector<Sparse> rep_counts(palette);
  {
    std::vector<std::uint64_t> keys(m);
    for (Color c = 0; c < palette; ++c)
      if (rep[c] != m * m)
        triple_counts(config, transposed, rep[c] / m, rep[c] % m, keys, rep_counts[c]);
  }

  // First mismatching column per row, m when the row agrees.
  std::vector<std::size_t> bad_column(m, m);
  const auto rows = static_cast<long long>(m);
#pragma omp parallel
  {
    std::vector<std::uint64_t> keys(m);
    Sparse counts;
#pragma omp for schedule(dynamic, 1)
    for (long long v1 = 0; v1 < rows; ++v1)
      for (std::size_t v2 = 0; v2 < m; ++v2) {
        triple_counts(config, transposed, static_cast<Vertex>(v1), static_cast<Vertex>(v2),
                      keys, counts);
        if (counts != rep_counts[config.at(v1, v2)]) {
          bad_column[v1] = v2;
          break;
        }
      }
  }

  CoherenceResult result;
  for (Vertex v1 = 0; v1 < m; ++v1) {
    if (bad_column[v1] == m) continue;
    const Vertex v2 = static_cast<Vertex>(bad_column[v1]);
    const Color c0 = config.at(v1, v2);
    std::vector<std::uint64_t> keys(m);
    Sparse counts;
    triple_counts(config, transposed, v1, v2, keys, counts);
    const Sparse& expected = rep_counts[c0];
    // First key on which the two sparse lists disagree.
    std::size_t i = 0;
    std::size_t j = 0;
    std::uint64_t key = 0;
    std::uint64_t ca = 0;
    std::uint64_t cb = 0;
    while (true) {
      const std::uint64_t ka = i < expected.size() ? expected[i].first : ~0ull;
      const std::uint64_t kb = j < counts.size() ? counts[j].first : ~0ull;
      key = std::min(ka, kb);
      ca = ka == key ? expected[i].second : 0;
      cb = kb == key ? counts[j].second : 0;
      if (ca != cb) break;
      ++i;
      ++j;
    }
    CoherenceViolation violation;
    violation.c0 = c0;
    violation.c1 = static_cast<Color>(key / palette);
    violation.c2 = static_cast<Color>(key % palette);
    violation.pair_a = {static_cast<Vertex>(rep[c0] / m), static_cast<Vertex>(rep[c0] % m)};
    violation.pair_b = {v1, v2};
    violation.count_a = ca;
    violation.count_b = cb;
    result.violation = violation;
    return result;
  }

  CoherenceCertificate certificate;
  for (Color c0 = 0; c0 < palette; ++c0)
    for (const auto& [key, count] : rep_counts[c0])
      certificate.gamma[{c0, static_cast<Color>(key / palette),
                         static_cast<Color>(key % palette)}] = count;
  result.certificate = std::move(certificate);
  return result;
}

WalkCounter::WalkCounter(const Configuration& config) {
  CoherenceResult coherence = check_coherent(config);
  if (!coherence.coherent())
    throw Error(ErrorKind::NotCoherent, "walk constants need a coherent configuration");
  palette_ = config.color_count();
  used_.assign(palette_, false);
  for (Color c : config.colors()) used_[c] = true;
  index(*coherence.certificate);
}

WalkCounter::WalkCounter(const Configuration& config, const CoherenceCertificate& certificate) {
  palette_ = config.color_count();
  used_.assign(palette_, false);
  for (Color c : config.colors()) used_[c] = true;
  index(certificate);
}

void WalkCounter::index(const CoherenceCertificate& certificate) {
  rows_.assign(palette_, {});
  entries_.reserve(certificate.gamma.size());
  // The certificate is sorted by (c0, c1, c2), so rows come out grouped.
  for (const auto& [key, value] : certificate.gamma) {
    auto& rows = rows_[key[0]];
    const auto at = static_cast<std::uint32_t>(entries_.size());
    if (rows.empty() || rows.back().c1 != key[1]) rows.push_back({key[1], at, at});
    entries_.emplace_back(key[2], value);
    rows.back().end = at + 1;
  }
}

void WalkCounter::require_color(Color c0) const {
  if (c0 >= palette_ || !used_[c0])
    throw Error(ErrorKind::NoPairOfColor, "no pair has color " + std::to_string(c0));
}

const WalkCounter::Row* WalkCounter::find_row(Color c0, Color c1) const {
  const auto& rows = rows_[c0];
  auto it = std::lower_bound(rows.begin(), rows.end(), c1,
                             [](const Row& r, Color c) { return r.c1 < c; });
  return it != rows.end() && it->c1 == c1 ? &*it : nullptr;
}

WalkCounter::Sparse WalkCounter::extend(const Sparse& q, Color middle,
                                        std::vector<std::uint64_t>& scratch) const {
  std::vector<Color> touched;
  for (const auto& [c, weight] : q) {
    const Row* row = find_row(c, middle);
    if (!row) continue;
    for (std::uint32_t i = row->begin; i < row->end; ++i) {
      const auto& [out, value] = entries_[i];
      if (scratch[out] == 0) touched.push_back(out);
      scratch[out] += weight * value;
    }
  }
  std::sort(touched.begin(), touched.end());
  Sparse next;
  next.reserve(touched.size());
  for (Color c : touched) {
    next.emplace_back(c, scratch[c]);
    scratch[c] = 0;
  }
  return next;
}

std::uint64_t WalkCounter::count(Color c0, std::span<const Color> sequence) const {
  require_color(c0);
  if (sequence.size() < 2)
    throw Error(ErrorKind::OutOfRange, "walk sequences need at least two colors");
  for (Color c : sequence)
    if (c >= palette_) throw Error(ErrorKind::OutOfRange, "sequence color out of range");
  std::vector<std::uint64_t> scratch(palette_, 0);
  // q[c] = gamma(c0; c1, ..., c_{j-1}, c), starting at j = 2.
  Sparse q = extend({{c0, 1}}, sequence[0], scratch);
  for (std::size_t j = 1; j + 1 < sequence.size() && !q.empty(); ++j)
    q = extend(q, sequence[j], scratch);
  auto it = std::lower_bound(q.begin(), q.end(), sequence.back(),
                             [](const auto& entry, Color c) { return entry.first < c; });
  return it != q.end() && it->first == sequence.back() ? it->second : 0;
}

std::map<std::vector<Color>, std::uint64_t> WalkCounter::nonzero(Color c0,
                                                                 std::size_t max_length) const {
  require_color(c0);
  std::map<std::vector<Color>, std::uint64_t> result;
  if (max_length < 2) return result;
  std::vector<std::uint64_t> scratch(palette_, 0);
  std::vector<Color> prefix;
  // Depth-first over prefixes c1..c_{j-1}; q closes the walk with color c.
  auto visit = [&](auto&& self, const Sparse& q) -> void {
    for (const auto& [c, value] : q) {
      prefix.push_back(c);
      result.emplace(prefix, value);
      prefix.pop_back();
    }
    if (prefix.size() + 1 >= max_length) return;
    std::vector<Color> middles;
    for (const auto& [c, value] : q)
      for (const Row& row : rows_[c]) middles.push_back(row.c1);
    std::sort(middles.begin(), middles.end());
    middles.erase(std::unique(middles.begin(), middles.end()), middles.end());
    for (Color middle : middles) {
      const Sparse next = extend(q, middle, scratch);
      if (next.empty()) continue;
      prefix.push_back(middle);
      self(self, next);
      prefix.pop_back();
    }
  };
  for (const Row& row : rows_[c0]) {
    const Sparse q = extend({{c0, 1}}, row.c1, scratch);
    if (q.empty()) continue;
    prefix.push_back(row.c1);
    visit(visit, q);
    prefix.pop_back();
  }
  return result;
}

std::uint64_t walk_constants(const Configuration& config, std::span<const Color> sequence,
                             Color c0) {
  return WalkCounter(config).count(c0, sequence);
}

bool is_automorphism(const Configuration& config, const Permutation& phi) {
  if (phi.degree() != config.size())
    throw Error(ErrorKind::DegreeMismatch, "permutation degree differs from vertex count");
  const std::size_t m = config.size();
  for (Vertex v1 = 0; v1 < m; ++v1)
    for (Vertex v2 = 0; v2 < m; ++v2)
      if (config.at(v1, v2) != config.at(phi(v1), phi(v2))) return false;
  return true;
}

AutomorphismCheck verify_automorphism(const WLTrace& trace, const Permutation& phi) {
  if (trace.snapshots.empty() || phi.degree() != trace.snapshots.front().size())
    throw Error(ErrorKind::DegreeMismatch, "permutation degree differs from vertex count");
  for (std::size_t h = 0; h < trace.snapshots.size(); ++h) {
    const auto& config = trace.snapshots[h];
    const std::size_t m = config.size();
    for (Vertex v1 = 0; v1 < m; ++v1)
      for (Vertex v2 = 0; v2 < m; ++v2)
        if (config.at(v1, v2) != config.at(phi(v1), phi(v2)))
          return AutomorphismCheck{false, h, v1, v2};
  }
  return {};
}

}  // namespace wlcc
