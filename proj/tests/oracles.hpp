#pragma once

// Slow, obviously-correct reference implementations used to cross-check the
// library. Nothing here calls into the code under test except for the
// EdgeColoring container itself.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "gr/coloring.hpp"
#include "gr/pattern.hpp"

namespace oracle {

using gr::Color;
using gr::EdgeColoring;
using Rng = std::mt19937_64;

inline int edges_of(int n) { return n * (n - 1) / 2; }

// Color vector in lexicographic edge order -> coloring.
inline EdgeColoring from_vector(int n, int k, const std::vector<Color>& colors) {
  gr::ColoringBuilder b(n, k);
  std::size_t e = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.set(i, j, colors[e++]);
  return std::move(b).build();
}

inline std::vector<Color> to_vector(const EdgeColoring& c) {
  std::vector<Color> out;
  for (int i = 0; i < c.n(); ++i)
    for (int j = i + 1; j < c.n(); ++j) out.push_back(c(i, j));
  return out;
}

inline EdgeColoring random_coloring(Rng& rng, int n, int k) {
  std::uniform_int_distribution<int> pick(1, k);
  std::vector<Color> colors(edges_of(n));
  for (auto& c : colors) c = pick(rng);
  return from_vector(n, k, colors);
}

inline bool is_rainbow(const EdgeColoring& c, int x, int y, int z) {
  const Color a = c(x, y), b = c(x, z), d = c(y, z);
  return a != b && a != d && b != d;
}

inline std::optional<std::array<int, 3>> first_rainbow(const EdgeColoring& c) {
  for (int x = 0; x < c.n(); ++x)
    for (int y = x + 1; y < c.n(); ++y)
      for (int z = y + 1; z < c.n(); ++z)
        if (is_rainbow(c, x, y, z)) return std::array<int, 3>{x, y, z};
  return std::nullopt;
}

// Every m-subset of the host, every bijection from the pattern onto it.
inline bool has_mono_copy(const EdgeColoring& c, const gr::Pattern& p, Color color) {
  const int n = c.n(), m = p.m;
  if (m > n) return false;
  if (p.edges.empty()) return true;
  std::vector<int> subset(m);
  std::iota(subset.begin(), subset.end(), 0);
  while (true) {
    std::vector<int> image = subset;
    do {
      bool ok = true;
      for (auto [a, b] : p.edges)
        if (c(image[a], image[b]) != color) {
          ok = false;
          break;
        }
      if (ok) return true;
    } while (std::next_permutation(image.begin(), image.end()));
    int i = m - 1;
    while (i >= 0 && subset[i] == n - m + i) --i;
    if (i < 0) return false;
    ++subset[i];
    for (int j = i + 1; j < m; ++j) subset[j] = subset[j - 1] + 1;
  }
}

inline bool embedding_is_valid(const EdgeColoring& c, const gr::Pattern& p,
                               const std::vector<int>& map, Color color) {
  if (static_cast<int>(map.size()) != p.m) return false;
  std::set<int> seen(map.begin(), map.end());
  if (static_cast<int>(seen.size()) != p.m) return false;
  for (int v : map)
    if (v < 0 || v >= c.n()) return false;
  for (auto [a, b] : p.edges)
    if (c(map[a], map[b]) != color) return false;
  return true;
}

inline std::uint64_t automorphisms(const gr::Pattern& p) {
  std::set<std::pair<int, int>> edges(p.edges.begin(), p.edges.end());
  std::vector<int> perm(p.m);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (auto [a, b] : p.edges) {
      auto e = std::minmax(perm[a], perm[b]);
      if (!edges.count({e.first, e.second})) {
        ok = false;
        break;
      }
    }
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

inline std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::uint64_t out = 1;
  for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

// Number of subgraphs of K_n isomorphic to p.
inline std::uint64_t labelled_copies(int n, const gr::Pattern& p) {
  if (p.m > n) return 0;
  std::uint64_t fact = 1;
  for (int i = 2; i <= p.m; ++i) fact *= i;
  return binomial(n, p.m) * (fact / automorphisms(p));
}

inline bool parts_valid(const EdgeColoring& c, const std::vector<std::vector<int>>& parts) {
  if (parts.size() < 2) return false;
  std::vector<int> owner(c.n(), -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) return false;
    for (int v : parts[i]) {
      if (v < 0 || v >= c.n() || owner[v] >= 0) return false;
      owner[v] = static_cast<int>(i);
    }
  }
  if (std::count(owner.begin(), owner.end(), -1) > 0) return false;
  std::set<Color> between;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      const Color first = c(parts[i][0], parts[j][0]);
      for (int u : parts[i])
        for (int v : parts[j])
          if (c(u, v) != first) return false;
      between.insert(first);
    }
  return between.size() <= 2;
}

// Gallai coloring built by recursive substitution into 2-colored bases.
inline EdgeColoring random_gallai(Rng& rng, int budget, int k) {
  std::uniform_int_distribution<int> color(1, k);
  if (budget <= 1) return EdgeColoring::monochromatic(1, 1, k);
  const int base_n = std::uniform_int_distribution<int>(2, std::min(budget, 5))(rng);
  const Color a = color(rng), b = color(rng);
  gr::ColoringBuilder base(base_n, k);
  for (int i = 0; i < base_n; ++i)
    for (int j = i + 1; j < base_n; ++j) base.set(i, j, rng() % 2 ? a : b);
  // Split the budget among the parts, at least one vertex each.
  std::vector<int> sizes(base_n, 1);
  for (int extra = budget - base_n; extra > 0; --extra) sizes[rng() % base_n]++;
  std::vector<EdgeColoring> parts;
  for (int s : sizes) parts.push_back(random_gallai(rng, s, k));
  return gr::blowup(std::move(base).build(), parts).with_k(k);
}

// Every k-coloring of K_n in lexicographic order (first edge most
// significant, color 1 first). `visit` returns false to stop.
template <class Visit>
void enumerate_colorings(int n, int k, Visit visit) {
  const int m = edges_of(n);
  std::vector<Color> colors(m, 1);
  while (true) {
    if (!visit(colors)) return;
    int i = m - 1;
    while (i >= 0 && colors[i] == k) colors[i--] = 1;
    if (i < 0) return;
    ++colors[i];
  }
}

}  // namespace oracle
