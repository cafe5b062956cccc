#pragma once

// Structural queries on configurations: nonempty colors and the graph they
// span, distances, configuration and coherence verification, walk-count
// constants of coherent configurations, automorphism checks on traces.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "wlcc/algebra.hpp"
#include "wlcc/configuration.hpp"
#include "wlcc/wl.hpp"

namespace wlcc {

// Edge colors c such that every vertex has at most one w with c(v, w) = c.
std::vector<Color> nonempty_colors(const Configuration& config);

struct GammaGraph {
  std::size_t m = 0;
  // Out-neighbors per vertex (ascending) with the color of each arc.
  std::vector<std::vector<Vertex>> out;
  std::vector<std::vector<Color>> out_colors;

  std::size_t arc_count() const;
};

// Arcs (v1, v2), v1 != v2, whose color is nonempty.
GammaGraph gamma_graph(const Configuration& config);

// Arcs (v1, v2), v1 != v2, whose color is not of empty lineage. On a freshly
// built Schreier or Cayley configuration this is the generator graph itself.
GammaGraph generator_graph(const Configuration& config);

class DistanceTable {
 public:
  static constexpr int kUnreachable = -1;

  DistanceTable(std::size_t m, std::vector<int> distances)
      : m_(m), d_(std::move(distances)) {}

  std::size_t size() const { return m_; }
  int at(Vertex from, Vertex to) const { return d_[from * m_ + to]; }

 private:
  std::size_t m_;
  std::vector<int> d_;
};

// BFS from every source (sources processed in parallel).
DistanceTable all_pairs_distances(const GammaGraph& graph);

// Maximum finite distance; throws Disconnected naming a separated pair.
int diameter(const DistanceTable& distances);
int diameter(const GammaGraph& graph);

struct AntipodeReport {
  int diameter = 0;
  bool unique = false;
  // For each vertex, the vertices at distance equal to the diameter.
  std::vector<std::vector<Vertex>> antipodes;
};

AntipodeReport antipodes(const DistanceTable& distances);
bool antipode_unique(const GammaGraph& graph);

std::optional<ConfigViolation> check_configuration(const Configuration& config);

struct CoherenceCertificate {
  // Nonzero triple counts only; absent keys are zero.
  std::map<std::array<Color, 3>, std::uint64_t> gamma;

  std::uint64_t at(Color c0, Color c1, Color c2) const;
};

struct CoherenceViolation {
  Color c0 = 0;
  Color c1 = 0;
  Color c2 = 0;
  std::array<Vertex, 2> pair_a{};
  std::array<Vertex, 2> pair_b{};
  std::uint64_t count_a = 0;
  std::uint64_t count_b = 0;
};

struct CoherenceResult {
  std::optional<CoherenceCertificate> certificate;
  std::optional<CoherenceViolation> violation;

  bool coherent() const { return certificate.has_value(); }
};

// Exhaustive triple-count verification. The representative of each color is
// its first cell in row-major order; the reported violation is the first
// disagreeing cell in that order. Throws InvalidConfiguration when the input
// is not a configuration.
CoherenceResult check_coherent(const Configuration& config);

// Walk-count constants gamma(c0; c1, ..., ck) of a coherent configuration,
// evaluated by the recurrence
//   gamma(c0; c1..c_{k+1}) = sum_c' gamma(c0; c1..c_{k-1}, c') gamma(c'; c_k, c_{k+1}).
class WalkCounter {
 public:
  // Throws NotCoherent when the configuration has no certificate.
  explicit WalkCounter(const Configuration& config);
  WalkCounter(const Configuration& config, const CoherenceCertificate& certificate);

  // Requires sequence.size() >= 2; NoPairOfColor when c0 labels no pair.
  std::uint64_t count(Color c0, std::span<const Color> sequence) const;

  // Every sequence of length 2..max_length with a nonzero constant.
  std::map<std::vector<Color>, std::uint64_t> nonzero(Color c0,
                                                      std::size_t max_length) const;

  std::size_t color_count() const { return palette_; }

 private:
  // Sparse vector over colors, ascending by color.
  using Sparse = std::vector<std::pair<Color, std::uint64_t>>;
  // Triples (c0, c1, *) occupy entries_[begin, end).
  struct Row {
    Color c1;
    std::uint32_t begin;
    std::uint32_t end;
  };

  void index(const CoherenceCertificate& certificate);
  void require_color(Color c0) const;
  const Row* find_row(Color c0, Color c1) const;
  // Q_{j+1}(c) = sum_c' Q_j(c') gamma(c'; middle, c). scratch is a zeroed
  // palette-sized buffer and is left zeroed.
  Sparse extend(const Sparse& q, Color middle, std::vector<std::uint64_t>& scratch) const;

  std::size_t palette_ = 0;
  std::vector<bool> used_;
  std::vector<std::vector<Row>> rows_;
  std::vector<std::pair<Color, std::uint64_t>> entries_;
};

std::uint64_t walk_constants(const Configuration& config, std::span<const Color> sequence,
                             Color c0);

struct AutomorphismCheck {
  bool pass = true;
  std::size_t iteration = 0;
  Vertex v1 = 0;
  Vertex v2 = 0;
};

// Whether phi preserves the coloring of a single configuration.
bool is_automorphism(const Configuration& config, const Permutation& phi);

// Checks phi against every snapshot; DegreeMismatch on wrong degree.
AutomorphismCheck verify_automorphism(const WLTrace& trace, const Permutation& phi);

}  // namespace wlcc
