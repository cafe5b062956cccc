#include "wlcc/theorems.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "wlcc/errors.hpp"

namespace wlcc {

int ceil_log2(long long t) {
  if (t <= 1) return 0;
  return static_cast<int>(std::bit_width(static_cast<unsigned long long>(t - 1)));
}

BoundReport verify_upper(int wl_count, int diameter) {
  if (diameter < 1) throw Error(ErrorKind::OutOfRange, "upper bound needs diam >= 1");
  BoundReport r;
  r.theorem = "upper";
  r.wl_count = wl_count;
  r.diameter = diameter;
  r.lhs = wl_count;
  r.rhs = std::log2(static_cast<double>(diameter)) + 3.0;
  r.holds = r.lhs <= r.rhs + kBoundSlack;
  return r;
}

BoundReport verify_lower_sl(int wl_count, int diameter, int q) {
  if (q <= 2)
    throw Error(ErrorKind::InapplicableQ, "the SL lower bound needs q > 2, got q = " +
                                              std::to_string(q));
  if (diameter < 1) throw Error(ErrorKind::OutOfRange, "lower bound needs diam >= 1");
  BoundReport r;
  r.theorem = "lower_sl";
  r.wl_count = wl_count;
  r.diameter = diameter;
  r.p = smallest_prime_divisor(q - 1);
  r.lhs = wl_count;
  r.rhs = std::log2(static_cast<double>(diameter)) -
          std::log2(static_cast<double>(*r.p - 1)) - 3.0;
  r.holds = r.lhs + kBoundSlack >= r.rhs;
  return r;
}

AutomorphismWitness make_witness(Permutation phi, std::string provenance) {
  AutomorphismWitness w;
  w.order = phi.order();
  if (w.order < 2)
    throw Error(ErrorKind::InvalidArgument, "witness must not be the identity");
  Permutation power = phi;
  for (std::size_t i = 1; i < w.order; ++i) {
    auto fixed = power.fixed_points();
    if (!fixed.empty())
      throw Error(ErrorKind::HasFixedPoint, "power " + std::to_string(i) + " fixes point " +
                                                std::to_string(fixed.front()));
    power = power * phi;
  }
  w.phi = std::move(phi);
  w.fixed_point_free_powers = true;
  w.provenance = std::move(provenance);
  return w;
}

BoundReport verify_lower_general(int wl_count, int diameter,
                                 std::span<const AutomorphismWitness> witnesses,
                                 const WLTrace& trace) {
  if (witnesses.empty())
    throw Error(ErrorKind::InvalidArgument, "no automorphism witness available");
  if (diameter < 1) throw Error(ErrorKind::OutOfRange, "lower bound needs diam >= 1");
  std::size_t order = 0;
  std::string provenance;
  for (const auto& w : witnesses) {
    if (!w.fixed_point_free_powers)
      throw Error(ErrorKind::HasFixedPoint, "witness '" + w.provenance + "' not validated");
    if (!is_automorphism(trace.initial(), w.phi))
      throw Error(ErrorKind::NotAutomorphism,
                  "witness '" + w.provenance + "' does not preserve the initial coloring");
    if (order == 0 || w.order < order) {
      order = w.order;
      provenance = w.provenance;
    }
  }
  BoundReport r;
  r.theorem = "lower_general";
  r.wl_count = wl_count;
  r.diameter = diameter;
  r.witness_order = order;
  r.lhs = wl_count;
  r.rhs = std::log2(static_cast<double>(diameter)) -
          std::log2(static_cast<double>(order - 1)) - 3.0;
  r.holds = r.lhs + kBoundSlack >= r.rhs;
  r.note = "witness-relative: minimal order over supplied witnesses (" + provenance + ")";
  return r;
}

BoundReport cayley_exact(int wl_count, int diameter, bool antipodes_unique) {
  if (diameter < 1) throw Error(ErrorKind::OutOfRange, "Cayley formula needs diam >= 1");
  BoundReport r;
  r.theorem = "cayley_exact";
  r.wl_count = wl_count;
  r.diameter = diameter;
  r.antipode_unique = antipodes_unique;
  r.lhs = wl_count;
  r.rhs = antipodes_unique ? ceil_log2(diameter - 1) : ceil_log2(diameter);
  r.holds = wl_count == static_cast<int>(r.rhs);
  if (antipodes_unique && diameter == 1)
    r.note = "diam = 1 with unique antipodes: log2(0) branch, ceil_log2 taken as 0";
  return r;
}

BartholdiResult bartholdi_check(const GroupClosure& group, const WLTrace& trace,
                                std::size_t k) {
  if (!trace.complete || k >= trace.snapshots.size())
    throw Error(ErrorKind::OutOfRange, "snapshot " + std::to_string(k) + " not available");
  const long long radius = k >= 40 ? static_cast<long long>(group.size())
                                   : std::min<long long>(1LL << k, group.size());
  std::map<std::size_t, std::vector<std::string>> connection;
  for (std::size_t g : group.ball(radius)) connection[g] = {"g" + std::to_string(g)};
  const Configuration power = cayley_config(group, connection);
  const Configuration& snapshot = trace.snapshots[k];

  BartholdiResult result;
  result.k = k;
  result.connection_size = connection.size();
  result.pass = partition_equal(snapshot, power);
  if (!result.pass) {
    const std::size_t m = group.size();
    constexpr Color kUnset = ~Color{0};
    std::vector<Color> fwd(snapshot.color_count(), kUnset);
    std::vector<Color> bwd(power.color_count(), kUnset);
    for (std::size_t cell = 0; cell < m * m && !result.witness; ++cell) {
      const Color a = snapshot.colors()[cell];
      const Color b = power.colors()[cell];
      if (fwd[a] == kUnset) fwd[a] = b;
      if (bwd[b] == kUnset) bwd[b] = a;
      if (fwd[a] != b || bwd[b] != a)
        result.witness = std::array<Vertex, 2>{static_cast<Vertex>(cell / m),
                                               static_cast<Vertex>(cell % m)};
    }
  }
  return result;
}

BartholdiResult bartholdi_check(const ActionSpec& spec, std::size_t k, std::size_t cap) {
  const GroupClosure group = GroupClosure::generate(spec, cap);
  std::map<std::size_t, std::vector<std::string>> connection;
  for (std::size_t i = 0; i < group.generator_labels().size(); ++i)
    connection[group.generator_elements()[i]].push_back(group.generator_labels()[i]);
  const WLTrace trace = wl_run(cayley_config(group, connection));
  return bartholdi_check(group, trace, k);
}

namespace {

long long reach(std::size_t k) { return k >= 40 ? (1LL << 40) : (1LL << k); }

}  // namespace

std::optional<std::size_t> far_pairs_uniform(const WLTrace& trace,
                                             const DistanceTable& distances) {
  for (std::size_t k = 0; k < trace.snapshots.size(); ++k) {
    const auto& config = trace.snapshots[k];
    const std::size_t m = config.size();
    std::optional<Color> shared;
    bool ok = true;
    for (Vertex u = 0; u < m && ok; ++u)
      for (Vertex v = 0; v < m; ++v) {
        if (distances.at(u, v) <= reach(k)) continue;
        if (!shared) shared = config.at(u, v);
        if (config.at(u, v) != *shared) {
          ok = false;
          break;
        }
      }
    if (!ok) return k;
  }
  return std::nullopt;
}

std::optional<std::size_t> orbit_pairs_uniform(const WLTrace& trace,
                                               const DistanceTable& distances,
                                               const Permutation& phi) {
  const std::size_t m = distances.size();
  std::vector<std::vector<Vertex>> orbit(m);
  for (Vertex w = 0; w < m; ++w) {
    Vertex x = w;
    do {
      orbit[w].push_back(x);
      x = phi(x);
    } while (x != w);
  }
  for (std::size_t k = 0; k < trace.snapshots.size(); ++k) {
    const auto& config = trace.snapshots[k];
    for (Vertex v = 0; v < m; ++v)
      for (Vertex w = 0; w < m; ++w) {
        const auto& o = orbit[w];
        if (!std::all_of(o.begin(), o.end(),
                         [&](Vertex x) { return distances.at(v, x) > reach(k); }))
          continue;
        for (Vertex x : o)
          if (config.at(v, x) != config.at(v, o.front())) return k;
      }
  }
  return std::nullopt;
}

std::vector<AutomorphismWitness> scalar_witnesses(const SlAction& action) {
  const Field& field = action.tuples.field();
  const int n = action.tuples.dimension();
  std::vector<AutomorphismWitness> out;
  for (Element h = 2; h < static_cast<Element>(field.order()); ++h) {
    try {
      Permutation phi = perm_from_matrix(FqMatrix::scalar(field, n, h), action.tuples);
      out.push_back(make_witness(std::move(phi), "scalar " + std::to_string(h)));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotClosed) throw;
    }
  }
  return out;
}

std::vector<AutomorphismWitness> scalar_witnesses_of_order(const SlAction& action,
                                                           std::size_t order) {
  std::vector<AutomorphismWitness> out;
  for (auto& w : scalar_witnesses(action))
    if (w.order == order) out.push_back(std::move(w));
  return out;
}

AutomorphismWitness right_multiplication(const GroupClosure& group, std::size_t h) {
  std::vector<std::uint32_t> images(group.size());
  for (std::size_t g = 0; g < group.size(); ++g)
    images[g] = static_cast<std::uint32_t>(group.multiply(g, h));
  return make_witness(Permutation(std::move(images)),
                      "right-mult " + std::to_string(h));
}

}  // namespace wlcc
