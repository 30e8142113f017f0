#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gr {

enum class PatternFamily { Catalog, Kipas, Path, Star, Cycle, Complete };

/// Names a target graph: one of the twelve 5-vertex catalog graphs h1..h12
/// or a member of a parametric family.
///
/// Text forms accepted by parse(): `h1`..`h12`, `kipas(m)`, `path(n)`,
/// `star(n)`, `cycle(n)`, `complete(n)`, and the aliases `p3`, `k3`.
struct PatternId {
  PatternFamily family = PatternFamily::Catalog;
  int param = 1;

  static PatternId h(int index) { return {PatternFamily::Catalog, index}; }
  static PatternId kipas(int m) { return {PatternFamily::Kipas, m}; }
  static PatternId path(int n) { return {PatternFamily::Path, n}; }
  static PatternId star(int leaves) { return {PatternFamily::Star, leaves}; }
  static PatternId cycle(int n) { return {PatternFamily::Cycle, n}; }
  static PatternId complete(int n) { return {PatternFamily::Complete, n}; }

  static PatternId parse(std::string_view text);
  std::string to_string() const;

  auto operator<=>(const PatternId&) const = default;
};

/// A simple graph on vertices 0..m-1. Edges are stored as (a, b) with a < b,
/// sorted ascending.
struct Pattern {
  int m = 0;
  std::vector<std::pair<int, int>> edges;
  std::string label;

  bool operator==(const Pattern&) const = default;
};

/// Validates and normalizes an explicit edge list (UnknownPattern on loops,
/// duplicates or out-of-range vertices).
Pattern make_pattern(int m, std::vector<std::pair<int, int>> edges, std::string label);

/// Labeled pattern for `id`. Catalog graphs use the vertex labels of the
/// reference drawing shifted to 0-based; kipas(m) puts the hub at 0 and the
/// rim path on 1..m.
Pattern resolve(PatternId id);

/// h1..h12 in order.
std::vector<PatternId> catalog_ids();

/// Brute force over all bijections; TooLarge when m > 10.
bool are_isomorphic(const Pattern& p, const Pattern& q);

/// Exact chromatic number by backtracking; TooLarge when m > 10.
int chromatic_number(const Pattern& p);

}  // namespace gr
