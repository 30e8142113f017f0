#pragma once

#include <vector>

#include "gr/coloring.hpp"

namespace gr {

/// Gallai partition: parts are modules of the coloring (every cross pair of
/// parts is joined in a single color) and the quotient uses at most two
/// colors. Parts are sorted internally and ordered by their least vertex.
struct GallaiPartition {
  std::vector<std::vector<int>> parts;
  EdgeColoring quotient = EdgeColoring::monochromatic(1, 1);

  int ell() const noexcept { return static_cast<int>(parts.size()); }
};

struct PartitionOptions {
  /// Number of seed vertices tried (0 = all).
  int seed_cap = 0;
};

/// Partition with the fewest parts. When some color c splits the graph of
/// non-c edges into several components, the answer has two parts; otherwise
/// the parts are the maximal proper modules.
///
/// Throws RainbowTriangle (detail = witness triple) on non-Gallai input and
/// TooSmall when n < 2.
GallaiPartition gallai_partition(const EdgeColoring& c, const PartitionOptions& options = {});

/// Recomputes the quotient from `c`; InvalidPartition (detail = offending
/// part pair, or empty for cover errors) when `p` is not a valid partition.
EdgeColoring reduced_coloring(const EdgeColoring& c, const GallaiPartition& p);

}  // namespace gr
