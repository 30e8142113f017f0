#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gr {

/// Color index, 1-based: a coloring with k colors uses values in [1, k].
using Color = int;

/// Largest color budget the dense storage supports.
inline constexpr int kMaxColors = 255;

struct ColoredEdge {
  int i;
  int j;
  Color color;
};

class ColoringBuilder;

/// Edge coloring of the complete graph K_n. Vertices are 0-based, colors
/// 1-based. The declared budget k may exceed the set of colors in use.
/// Instances are immutable; all composition operators return new values.
class EdgeColoring {
 public:
  /// K_n with every edge in `color`; k defaults to `color`.
  static EdgeColoring monochromatic(int n, Color color, int k = 0);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }

  /// Color of the pair {i, j}; i != j.
  Color operator()(int i, int j) const noexcept {
    return cells_[static_cast<std::size_t>(i) * n_ + j];
  }

  /// Distinct colors appearing on at least one edge, ascending.
  std::vector<Color> colors_used() const;

  /// Same structure with a different declared budget (>= max used color).
  EdgeColoring with_k(int k) const;

  bool operator==(const EdgeColoring&) const = default;

 private:
  friend class ColoringBuilder;
  EdgeColoring(int n, int k, std::vector<std::uint8_t> cells)
      : n_(n), k_(k), cells_(std::move(cells)) {}

  int n_ = 0;
  int k_ = 0;
  std::vector<std::uint8_t> cells_;  // row-major n*n, diagonal 0
};

/// Mutable staging area for an EdgeColoring. Unset pairs hold color 0.
class ColoringBuilder {
 public:
  ColoringBuilder(int n, int k);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }

  /// Throws VertexOutOfRange / ColorOutOfRange.
  void set(int i, int j, Color color);
  Color get(int i, int j) const noexcept {
    return cells_[static_cast<std::size_t>(i) * n_ + j];
  }

  /// Copies `part` onto vertices offset, offset+1, ... keeping its colors.
  void embed(const EdgeColoring& part, int offset);

  /// Throws MissingEdge naming the first unset pair.
  EdgeColoring build() &&;

 private:
  int n_;
  int k_;
  std::vector<std::uint8_t> cells_;
};

/// Injective recoloring. Colors not listed in `map` keep their index.
struct ColorRelabeling {
  std::map<Color, Color> map;
  int new_k = 0;
};

EdgeColoring make_coloring(int n, int k, std::span<const ColoredEdge> entries);

/// Disjoint union of `left` and `right` with every cross edge in `bridge`.
EdgeColoring join(const EdgeColoring& left, const EdgeColoring& right, Color bridge);

/// Substitutes parts[i] for vertex i of `base`; edges between the copies of
/// parts i and j inherit base(i, j).
EdgeColoring blowup(const EdgeColoring& base, std::span<const EdgeColoring> parts);

EdgeColoring relabel_colors(const EdgeColoring& c, const ColorRelabeling& r);

/// Canonical GRC v1 text: `grc 1 <n> <k>` followed by the upper triangle,
/// row i listing colors of (i, i+1) ... (i, n-1).
std::string serialize(const EdgeColoring& c);
EdgeColoring parse(std::string_view doc);

}  // namespace gr
