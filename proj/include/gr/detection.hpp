#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gr/coloring.hpp"
#include "gr/pattern.hpp"

namespace gr {

using Triple = std::array<int, 3>;

/// A monochromatic copy: map[p] is the host vertex of pattern vertex p.
/// Copies are non-induced; only pattern edges are constrained.
struct Embedding {
  std::vector<int> map;
  Color color = 0;

  bool operator==(const Embedding&) const = default;
};

/// Forbidden pattern per color, plus whether rainbow triangles are forbidden.
struct AvoidanceSpec {
  std::map<Color, PatternId> per_color;
  bool require_gallai = false;

  /// Forbids `id` in every color 1..k.
  static AvoidanceSpec forbid_all(PatternId id, int k, bool require_gallai = true);
};

struct MonoWitness {
  PatternId pattern;
  Embedding embedding;
};

struct VerificationStats {
  std::uint64_t triangles_examined = 0;
  std::uint64_t colors_checked = 0;
  std::uint64_t search_nodes = 0;
};

struct VerificationReport {
  bool passed = true;
  std::optional<Triple> rainbow_witness;
  std::vector<MonoWitness> mono_witnesses;  // at most one per color, ascending color
  VerificationStats stats;
};

/// Lexicographically first triple x < y < z with three distinct edge colors.
std::optional<Triple> find_rainbow_triangle(const EdgeColoring& c);

/// First monochromatic copy of `p` in `color` under the matcher's static
/// vertex order (see Embedding for semantics).
std::optional<Embedding> find_mono_embedding(const EdgeColoring& c, const Pattern& p, Color color);

/// Number of distinct edge sets forming a copy of `p` in `color`. Exhaustive;
/// meant for small hosts.
std::uint64_t count_mono_copies(const EdgeColoring& c, const Pattern& p, Color color);

/// Checks the spec; per-color searches may run in parallel (see
/// set_thread_count) with identical results. ColorOutOfRange when the spec
/// names a color outside [1, c.k()].
VerificationReport verify(const EdgeColoring& c, const AvoidanceSpec& spec);

}  // namespace gr
