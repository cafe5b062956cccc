#pragma once

// Checks of iteration-count bounds against computed traces.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wlcc/algebra.hpp"
#include "wlcc/analysis.hpp"
#include "wlcc/schreier.hpp"
#include "wlcc/wl.hpp"

namespace wlcc {

// Slack applied toward acceptance in floating-point bound comparisons.
inline constexpr double kBoundSlack = 1e-9;

// ceil(log2 t), defined as 0 for t <= 1.
int ceil_log2(long long t);

struct BoundReport {
  std::string theorem;
  double lhs = 0;
  double rhs = 0;
  bool holds = false;
  int wl_count = 0;
  int diameter = 0;
  std::optional<long long> p;
  std::optional<std::size_t> witness_order;
  std::optional<bool> antipode_unique;
  std::string note;
};

// wl_count <= log2(diam) + 3.
BoundReport verify_upper(int wl_count, int diameter);

// wl_count >= log2(diam) - log2(p - 1) - 3 with p the least prime dividing
// q - 1. InapplicableQ for q <= 2.
BoundReport verify_lower_sl(int wl_count, int diameter, int q);

struct AutomorphismWitness {
  Permutation phi;
  std::size_t order = 0;
  bool fixed_point_free_powers = false;
  std::string provenance;
};

// Validates order >= 2 and that no nontrivial power of phi has a fixed point;
// HasFixedPoint names the offending power and point.
AutomorphismWitness make_witness(Permutation phi, std::string provenance);

// wl_count >= log2(diam) - log2(|<phi>| - 1) - 3, using the smallest order
// among the witnesses (the bound is relative to the supplied witnesses).
// Each witness must preserve the initial coloring (NotAutomorphism otherwise).
BoundReport verify_lower_general(int wl_count, int diameter,
                                 std::span<const AutomorphismWitness> witnesses,
                                 const WLTrace& trace);

// wl_count == ceil(log2(diam - 1)) when antipodes are unique, ceil(log2 diam)
// otherwise. An instance with diam = 1 and unique antipodes is flagged in the
// note.
BoundReport cayley_exact(int wl_count, int diameter, bool antipodes_unique);

struct BartholdiResult {
  bool pass = false;
  std::size_t k = 0;
  std::size_t connection_size = 0;
  std::optional<std::array<Vertex, 2>> witness;
};

// Compares snapshot k of the Cayley trace with the iteration-0 configuration
// of the Cayley graph whose connection set is the ball of radius 2^k.
BartholdiResult bartholdi_check(const GroupClosure& group, const WLTrace& trace,
                                std::size_t k);
BartholdiResult bartholdi_check(const ActionSpec& spec, std::size_t k,
                                std::size_t cap = kDefaultVertexCap);

// For every snapshot k: all pairs at distance > 2^k share one color. Returns
// the first iteration where this fails.
std::optional<std::size_t> far_pairs_uniform(const WLTrace& trace,
                                             const DistanceTable& distances);

// For every snapshot k and pairs (v, w): if d(v, phi^i(w)) > 2^k for all i,
// the colors c(v, phi^i(w)) coincide. Returns the first failing iteration.
std::optional<std::size_t> orbit_pairs_uniform(const WLTrace& trace,
                                               const DistanceTable& distances,
                                               const Permutation& phi);

// Scalar maps v -> h v on an SL tuple action for every h != 0, 1 whose map
// preserves the point set.
std::vector<AutomorphismWitness> scalar_witnesses(const SlAction& action);

// Scalar witnesses of one given multiplicative order (empty if none).
std::vector<AutomorphismWitness> scalar_witnesses_of_order(const SlAction& action,
                                                           std::size_t order);

// Right multiplication g -> g h on the Cayley vertex set of a closure.
AutomorphismWitness right_multiplication(const GroupClosure& group, std::size_t h);

}  // namespace wlcc
