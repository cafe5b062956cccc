#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wlcc {

using Color = std::uint32_t;
using Vertex = std::uint32_t;

struct ColorInfo {
  bool is_vertex = false;
  Color inverse = 0;
  // Set for the color of pairs reached by no generator and for every color
  // refined out of it.
  bool empty_lineage = false;
  std::string origin;
};

using ColorTable = std::vector<ColorInfo>;

// A complete coloring of the ordered pairs of m vertices together with its
// color metadata. Colors are dense ids into the table, stored row-major.
class Configuration {
 public:
  Configuration() = default;
  Configuration(std::size_t m, std::vector<Color> colors, ColorTable table,
                int iteration = 0);

  std::size_t size() const { return m_; }
  Color at(Vertex v1, Vertex v2) const { return colors_[v1 * m_ + v2]; }
  const std::vector<Color>& colors() const { return colors_; }
  const ColorTable& table() const { return table_; }
  const ColorInfo& info(Color c) const { return table_[c]; }
  std::size_t color_count() const { return table_.size(); }
  int iteration() const { return iteration_; }

 private:
  std::size_t m_ = 0;
  std::vector<Color> colors_;
  ColorTable table_;
  int iteration_ = 0;
};

// Builds a configuration from a bare color matrix. Vertex flags and inverse
// pairing are read off the matrix; origins and empty-lineage flags are
// supplied per color.
Configuration derive_configuration(std::size_t m, std::vector<Color> colors,
                                   std::vector<std::string> origins,
                                   std::vector<bool> empty_lineage,
                                   int iteration = 0);

struct ConfigViolation {
  // 1: a diagonal color reused off the diagonal. 2: inverse pairing broken.
  // 0: color table inconsistent with the matrix.
  int condition = 0;
  Vertex v1 = 0;
  Vertex v2 = 0;
  Color color = 0;
  std::string detail;
};

// First violation of the configuration axioms in row-major scan order.
std::optional<ConfigViolation> find_violation(const Configuration& config);

}  // namespace wlcc
