#include <map>
#include <utility>
#include <vector>

#include "wlcc/wl.hpp"

namespace wlcc {

namespace detail {
Configuration assemble_refined(const Configuration& old, std::vector<Color> colors,
                               std::size_t count);
void require_valid(const Configuration& config);
}  // namespace detail

StepResult wl_step_serial(const Configuration& config) {
  detail::require_valid(config);
  const std::size_t m = config.size();
  using Counts = std::vector<std::pair<std::pair<Color, Color>, std::uint64_t>>;
  using Signature = std::pair<Color, Counts>;

  std::vector<Signature> signatures;
  signatures.reserve(m * m);
  for (Vertex v1 = 0; v1 < m; ++v1)
    for (Vertex v2 = 0; v2 < m; ++v2) {
      std::map<std::pair<Color, Color>, std::uint64_t> counts;
      for (Vertex w = 0; w < m; ++w) ++counts[{config.at(v1, w), config.at(w, v2)}];
      signatures.emplace_back(config.at(v1, v2), Counts(counts.begin(), counts.end()));
    }

  std::map<Signature, Color> ids;
  for (const auto& sig : signatures) ids.emplace(sig, 0);
  Color next = 0;
  for (auto& [sig, id] : ids) id = next++;

  std::vector<Color> colors(m * m);
  for (std::size_t cell = 0; cell < m * m; ++cell) colors[cell] = ids.at(signatures[cell]);
  const bool refined = ids.size() > class_count(config);
  return {detail::assemble_refined(config, std::move(colors), ids.size()), refined};
}

}  // namespace wlcc
