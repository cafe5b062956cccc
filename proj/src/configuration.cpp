#include "wlcc/configuration.hpp"

#include <limits>

#include "wlcc/errors.hpp"

namespace wlcc {

Configuration::Configuration(std::size_t m, std::vector<Color> colors,
                             ColorTable table, int iteration)
    : m_(m), colors_(std::move(colors)), table_(std::move(table)),
      iteration_(iteration) {
  if (colors_.size() != m_ * m_)
    throw Error(ErrorKind::InvalidConfiguration,
                "color matrix is not " + std::to_string(m_) + "x" + std::to_string(m_));
  for (Color c : colors_)
    if (c >= table_.size())
      throw Error(ErrorKind::InvalidConfiguration,
                  "color id " + std::to_string(c) + " has no table entry");
  for (const auto& info : table_)
    if (info.inverse >= table_.size())
      throw Error(ErrorKind::InvalidConfiguration, "inverse color id out of range");
}

Configuration derive_configuration(std::size_t m, std::vector<Color> colors,
                                   std::vector<std::string> origins,
                                   std::vector<bool> empty_lineage, int iteration) {
  const std::size_t count = origins.size();
  if (empty_lineage.size() != count)
    throw Error(ErrorKind::InvalidArgument, "per-color metadata length mismatch");
  constexpr Color kUnset = std::numeric_limits<Color>::max();
  ColorTable table(count);
  std::vector<Color> inverse(count, kUnset);
  for (std::size_t v1 = 0; v1 < m; ++v1)
    for (std::size_t v2 = 0; v2 < m; ++v2) {
      const Color c = colors.at(v1 * m + v2);
      if (c >= count)
        throw Error(ErrorKind::InvalidConfiguration, "color id without metadata");
      if (v1 == v2) table[c].is_vertex = true;
      if (inverse[c] == kUnset) inverse[c] = colors[v2 * m + v1];
    }
  for (std::size_t c = 0; c < count; ++c) {
    table[c].inverse = inverse[c] == kUnset ? static_cast<Color>(c) : inverse[c];
    table[c].empty_lineage = empty_lineage[c];
    table[c].origin = std::move(origins[c]);
  }
  return Configuration(m, std::move(colors), std::move(table), iteration);
}

std::optional<ConfigViolation> find_violation(const Configuration& config) {
  const std::size_t m = config.size();
  const auto& table = config.table();
  std::vector<bool> on_diagonal(table.size(), false);
  for (std::size_t v = 0; v < m; ++v) on_diagonal[config.at(v, v)] = true;

  for (Color c = 0; c < table.size(); ++c) {
    const Color inv = table[c].inverse;
    if (table[inv].inverse != c)
      return ConfigViolation{0, 0, 0, c, "inverse map is not an involution"};
  }

  for (Vertex v1 = 0; v1 < m; ++v1)
    for (Vertex v2 = 0; v2 < m; ++v2) {
      const Color c = config.at(v1, v2);
      if (v1 != v2 && on_diagonal[c])
        return ConfigViolation{1, v1, v2, c,
                               "vertex color " + std::to_string(c) +
                                   " appears off the diagonal"};
      if (config.at(v2, v1) != table[c].inverse)
        return ConfigViolation{2, v1, v2, c,
                               "reverse pair has color " +
                                   std::to_string(config.at(v2, v1)) +
                                   ", table inverse is " +
                                   std::to_string(table[c].inverse)};
      if (table[c].is_vertex != on_diagonal[c])
        return ConfigViolation{0, v1, v2, c, "vertex flag disagrees with the matrix"};
    }
  return std::nullopt;
}

}  // namespace wlcc
