#include "wlcc/schreier.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "wlcc/errors.hpp"

namespace wlcc {

namespace {

std::string subset_origin(const std::vector<std::string>& labels) {
  if (labels.empty()) return kEmptyOrigin;
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += labels[i];
  }
  return out + "}";
}

// Assigns canonical color ids to label lists (sorted lexicographically, the
// empty list first) and builds the configuration.
Configuration configuration_from_subsets(
    std::size_t m, const std::vector<std::vector<std::string>*>& cell_labels) {
  static const std::vector<std::string> kNone;
  std::map<std::vector<std::string>, Color> ids;
  for (const auto* labels : cell_labels) ids.emplace(labels ? *labels : kNone, 0);
  std::vector<std::string> origins;
  std::vector<bool> empty;
  Color next = 0;
  for (auto& [labels, id] : ids) {
    id = next++;
    origins.push_back(subset_origin(labels));
    empty.push_back(labels.empty());
  }
  std::vector<Color> colors(m * m);
  for (std::size_t cell = 0; cell < m * m; ++cell)
    colors[cell] = ids.at(cell_labels[cell] ? *cell_labels[cell] : kNone);
  Configuration config = derive_configuration(m, std::move(colors), std::move(origins),
                                              std::move(empty));
  if (auto violation = find_violation(config))
    throw Error(ErrorKind::InvalidConfiguration,
                "constructed configuration violates condition " +
                    std::to_string(violation->condition) + ": " + violation->detail);
  return config;
}

}  // namespace

Configuration schreier_config(const ActionSpec& input) {
  const ActionSpec spec = input.validated ? input : genset_validate(input);
  const std::size_t m = spec.points;
  // Generators are sorted by label, so appending in generator order keeps
  // every cell's label list sorted.
  std::vector<std::vector<std::string>> storage;
  std::vector<std::vector<std::string>*> cells(m * m, nullptr);
  std::map<std::size_t, std::size_t> slot;
  for (std::size_t v = 0; v < m; ++v)
    for (const auto& g : spec.generators) {
      const std::size_t cell = v * m + g.perm(static_cast<std::uint32_t>(v));
      auto [it, inserted] = slot.emplace(cell, storage.size());
      if (inserted) storage.emplace_back();
      storage[it->second].push_back(g.label);
    }
  for (const auto& [cell, index] : slot) cells[cell] = &storage[index];
  return configuration_from_subsets(m, cells);
}

GroupClosure GroupClosure::generate(const ActionSpec& input, std::size_t cap) {
  const ActionSpec spec = input.validated ? input : genset_validate(input);
  GroupClosure group;
  std::vector<Permutation> order;
  std::map<Permutation, std::size_t> seen;
  const Permutation id = Permutation::identity(spec.points);
  order.push_back(id);
  seen.emplace(id, 0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto& g : spec.generators) {
      Permutation h = g.perm * order[head];
      if (seen.count(h)) continue;
      if (order.size() >= cap)
        throw Error(ErrorKind::GroupTooLarge,
                    "group closure exceeds the cap of " + std::to_string(cap));
      seen.emplace(h, order.size());
      order.push_back(std::move(h));
    }
  }

  group.regular_ = order.size() == spec.points;
  if (group.regular_) {
    std::vector<Permutation> by_image(order.size());
    for (auto& p : order) by_image[p(0)] = std::move(p);
    order = std::move(by_image);
  }
  group.elements_ = std::move(order);
  for (std::size_t i = 0; i < group.elements_.size(); ++i) {
    group.index_.emplace(group.elements_[i], i);
    if (group.elements_[i].is_identity()) group.identity_ = i;
  }
  for (const auto& g : spec.generators) {
    group.labels_.push_back(g.label);
    group.gen_elements_.push_back(group.index_.at(g.perm));
  }
  return group;
}

std::optional<std::size_t> GroupClosure::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GroupClosure::multiply(std::size_t a, std::size_t b) const {
  return index_.at(elements_[a] * elements_[b]);
}

std::size_t GroupClosure::inverse(std::size_t a) const {
  return index_.at(elements_[a].inverse());
}

std::vector<std::size_t> GroupClosure::ball(long long radius) const {
  std::vector<long long> dist(size(), -1);
  std::queue<std::size_t> frontier;
  dist[identity_] = 0;
  frontier.push(identity_);
  while (!frontier.empty()) {
    const std::size_t g = frontier.front();
    frontier.pop();
    if (dist[g] >= radius) continue;
    for (std::size_t s : gen_elements_) {
      const std::size_t h = multiply(s, g);
      if (dist[h] < 0) {
        dist[h] = dist[g] + 1;
        frontier.push(h);
      }
    }
  }
  std::vector<std::size_t> result;
  for (std::size_t g = 0; g < size(); ++g)
    if (dist[g] >= 0) result.push_back(g);
  return result;
}

Configuration cayley_config(const GroupClosure& group,
                            const std::map<std::size_t, std::vector<std::string>>& connection) {
  const std::size_t m = group.size();
  std::vector<std::vector<std::string>> storage;
  storage.reserve(connection.size());
  std::vector<std::size_t> elements;
  for (const auto& [element, labels] : connection) {
    if (element >= m) throw Error(ErrorKind::OutOfRange, "connection element outside group");
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    storage.push_back(std::move(sorted));
    elements.push_back(element);
  }
  std::vector<std::vector<std::string>*> cells(m * m, nullptr);
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t i = 0; i < elements.size(); ++i)
      cells[g * m + group.multiply(elements[i], g)] = &storage[i];
  return configuration_from_subsets(m, cells);
}

Configuration cayley_config(const ActionSpec& spec, std::size_t cap) {
  const GroupClosure group = GroupClosure::generate(spec, cap);
  std::map<std::size_t, std::vector<std::string>> connection;
  for (std::size_t i = 0; i < group.generator_labels().size(); ++i)
    connection[group.generator_elements()[i]].push_back(group.generator_labels()[i]);
  return cayley_config(group, connection);
}

ActionSpec regular_action(const GroupClosure& group) {
  ActionSpec spec;
  spec.points = group.size();
  spec.origin = "regular action on the group closure";
  for (std::size_t i = 0; i < group.generator_labels().size(); ++i) {
    const std::size_t s = group.generator_elements()[i];
    std::vector<std::uint32_t> images(group.size());
    for (std::size_t g = 0; g < group.size(); ++g)
      images[g] = static_cast<std::uint32_t>(group.multiply(s, g));
    spec.generators.push_back({group.generator_labels()[i], Permutation(std::move(images)), {}});
  }
  return genset_validate(std::move(spec));
}

ActionSpec sym_adjacent(int n) {
  if (n < 3) throw Error(ErrorKind::OutOfRange, "sym_adjacent needs n >= 3");
  std::map<std::string, std::vector<std::uint32_t>> gens;
  gens["e"] = Permutation::identity(n).images();
  for (int i = 0; i < n; ++i) {
    const auto j = static_cast<std::uint32_t>((i + 1) % n);
    const auto ii = static_cast<std::uint32_t>(i);
    gens["(" + std::to_string(i) + " " + std::to_string(j) + ")"] =
        Permutation::from_cycles(n, {{ii, j}}).images();
  }
  ActionSpec spec = make_action(n, std::move(gens),
                                "Sym(" + std::to_string(n) + ") on Z/" +
                                    std::to_string(n) + "Z, adjacent transpositions");
  return genset_validate(std::move(spec));
}

ActionSpec cycle_cayley(int n, std::optional<std::vector<int>> steps) {
  if (n < 3) throw Error(ErrorKind::OutOfRange, "cycle_cayley needs n >= 3");
  std::set<int> residues{0};
  for (int s : steps.value_or(std::vector<int>{1})) {
    const int r = ((s % n) + n) % n;
    residues.insert(r);
    residues.insert((n - r) % n);
  }
  std::map<std::string, std::vector<std::uint32_t>> gens;
  for (int r : residues) {
    std::string label = r == 0 ? "e"
                        : 2 * r <= n ? "+" + std::to_string(r)
                                     : "-" + std::to_string(n - r);
    std::vector<std::uint32_t> images(n);
    for (int i = 0; i < n; ++i) images[i] = static_cast<std::uint32_t>((i + r) % n);
    gens[label] = std::move(images);
  }
  ActionSpec spec =
      make_action(n, std::move(gens), "Z/" + std::to_string(n) + "Z regular action");
  return genset_validate(std::move(spec));
}

ActionSpec heptagon_pair() {
  auto cycles = [](std::vector<std::vector<std::uint32_t>> one_indexed) {
    for (auto& c : one_indexed)
      for (auto& v : c) --v;
    return Permutation::from_cycles(14, one_indexed);
  };
  const Permutation sigma =
      cycles({{1, 2, 3, 4, 5, 6, 7}, {8, 9, 10, 11, 12, 13, 14}});
  const Permutation tau =
      cycles({{1, 8, 9, 2}, {3, 10}, {4, 11}, {5, 12}, {6, 13}, {7, 14}});
  ActionSpec spec;
  spec.points = 14;
  spec.origin = "two heptagons linked by tau";
  spec.generators = {{"e", Permutation::identity(14), {}},
                     {"sigma", sigma, {}},
                     {"sigma^-1", sigma.inverse(), {}},
                     {"tau", tau, {}},
                     {"tau^-1", tau.inverse(), {}}};
  spec.notes.push_back("points stored 0-indexed; label = index + 1");
  for (int i = 1; i <= 14; ++i) spec.point_labels.push_back(std::to_string(i));
  return genset_validate(std::move(spec));
}

std::pair<int, int> prime_power(int q) {
  if (q < 2) throw Error(ErrorKind::NonPrimeCharacteristic, "q must be at least 2");
  const int p = static_cast<int>(smallest_prime_divisor(q));
  int k = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1)
    throw Error(ErrorKind::NonPrimeCharacteristic,
                std::to_string(q) + " is not a prime power");
  return {p, k};
}

SlAction sl_tuples(int n, int q, int k, SlGenerators choice,
                   std::optional<std::vector<int>> modulus, std::size_t cap) {
  if (n < 1 || k < 1 || k > n)
    throw Error(ErrorKind::OutOfRange, "sl_tuples needs 1 <= k <= n");
  const auto [p, degree] = prime_power(q);
  const Field field = Field::make(p, degree, std::move(modulus));
  TupleSet tuples = tuples_enumerate(field, n, k, cap);

  std::vector<std::pair<std::string, FqMatrix>> mats;
  switch (choice) {
    case SlGenerators::Transvections:
      mats = transvection_generators(field, n);
      break;
  }
  for (const auto& [label, mat] : mats)
    if (mat.determinant() != field.one())
      throw Error(ErrorKind::InvalidArgument, "generator " + label + " is not in SL");

  std::vector<std::string> notes{
      "generating set: identity and elementary transvections E_ij(+-x^t), 0 <= t < deg F_q"};
  if (k == n) {
    std::vector<Element> basis(static_cast<std::size_t>(n) * n, field.zero());
    for (int j = 0; j < n; ++j) basis[j * n + j] = field.one();
    std::vector<Permutation> perms;
    for (const auto& [label, mat] : mats) perms.push_back(perm_from_matrix(mat, tuples));
    const std::size_t start = *tuples.index_of(basis);
    std::vector<bool> reached(tuples.size(), false);
    std::queue<std::size_t> frontier;
    reached[start] = true;
    frontier.push(start);
    while (!frontier.empty()) {
      const std::size_t v = frontier.front();
      frontier.pop();
      for (const auto& g : perms) {
        const std::size_t w = g(static_cast<std::uint32_t>(v));
        if (!reached[w]) {
          reached[w] = true;
          frontier.push(w);
        }
      }
    }
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < tuples.size(); ++i)
      if (reached[i]) keep.push_back(i);
    tuples = tuples.restricted(keep);
    notes.push_back("k = n: points restricted to the determinant-1 orbit of the standard basis");
  }
  if (q == 2) notes.push_back("q=2: lower bound theorem inapplicable");

  ActionSpec spec;
  spec.points = tuples.size();
  spec.origin = "SL_" + std::to_string(n) + "(F_" + std::to_string(q) + ") on " +
                std::to_string(k) + "-tuples";
  for (const auto& [label, mat] : mats)
    spec.generators.push_back({label, perm_from_matrix(mat, tuples), {}});
  spec.notes = std::move(notes);
  return SlAction{genset_validate(std::move(spec)), std::move(tuples)};
}

}  // namespace wlcc
