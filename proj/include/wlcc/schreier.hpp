#pragma once

// Configurations built from Schreier and Cayley graphs, and the named
// example actions.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wlcc/algebra.hpp"
#include "wlcc/configuration.hpp"

namespace wlcc {

inline constexpr std::size_t kDefaultVertexCap = 5000;

// Pairs reached by no generator carry this origin label.
inline constexpr const char* kEmptyOrigin = "∅";

// Colors pairs (v1, v2) by the set of generator labels s with s v1 = v2.
Configuration schreier_config(const ActionSpec& spec);

// The finite group generated by an action's generators, materialized by
// closure under left multiplication starting from the identity.
//
// When the action is regular (group order equals the number of points) the
// element with index i is the unique one sending point 0 to point i, so group
// elements and points share indices. Otherwise elements are numbered in
// breadth-first discovery order, generators tried in label order.
class GroupClosure {
 public:
  static GroupClosure generate(const ActionSpec& spec, std::size_t cap);

  std::size_t size() const { return elements_.size(); }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> index_of(const Permutation& p) const;
  // Index of a * b, b applied first.
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;
  std::size_t identity() const { return identity_; }
  bool regular() const { return regular_; }

  const std::vector<std::string>& generator_labels() const { return labels_; }
  // Group element index of each generator, parallel to generator_labels().
  const std::vector<std::size_t>& generator_elements() const { return gen_elements_; }

  // Elements within word distance `radius` of the identity (S^radius, since
  // the identity belongs to S), ascending by index.
  std::vector<std::size_t> ball(long long radius) const;

 private:
  std::vector<Permutation> elements_;
  std::map<Permutation, std::size_t> index_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> gen_elements_;
  std::size_t identity_ = 0;
  bool regular_ = false;
};

// Cayley configuration on the closure: c(g1, g2) = g2 g1^-1 when that ratio
// lies in the connection set, the empty color otherwise. Each connection
// element carries the labels naming it.
Configuration cayley_config(const GroupClosure& group,
                            const std::map<std::size_t, std::vector<std::string>>& connection);

// Cayley configuration of the group generated by spec, connection set = its
// generators. Throws GroupTooLarge above cap.
Configuration cayley_config(const ActionSpec& spec, std::size_t cap = kDefaultVertexCap);

// The group acting on itself by left multiplication, labels as in the closure.
ActionSpec regular_action(const GroupClosure& group);

// Z/nZ with the cyclically adjacent transpositions (i i+1) and the identity.
ActionSpec sym_adjacent(int n);

// Regular action of Z/nZ; the connection set is {0} together with +-s for
// every s in steps (default {1}).
ActionSpec cycle_cayley(int n, std::optional<std::vector<int>> steps = std::nullopt);

// The 14-point action with sigma two disjoint 7-cycles and tau linking them.
// Points are stored 0-indexed; point_labels carry the 1-indexed names.
ActionSpec heptagon_pair();

enum class SlGenerators { Transvections };

struct SlAction {
  ActionSpec action;
  TupleSet tuples;
};

// SL_n(F_q) acting on linearly independent k-tuples of F_q^n. For k = n the
// group is not transitive on all bases; the action is restricted to the
// orbit of the standard basis (determinant 1). q = 2 is accepted and flagged.
SlAction sl_tuples(int n, int q, int k, SlGenerators choice = SlGenerators::Transvections,
                   std::optional<std::vector<int>> modulus = std::nullopt,
                   std::size_t cap = kDefaultVertexCap);

// Splits a prime power q into (p, k); throws NonPrimeCharacteristic otherwise.
std::pair<int, int> prime_power(int q);

}  // namespace wlcc
