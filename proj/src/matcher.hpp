#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "gr/coloring.hpp"
#include "gr/pattern.hpp"

namespace gr::detail {

/// Symmetric adjacency matrix packed into 64-bit words, one row per vertex.
class BitRows {
 public:
  BitRows() = default;
  explicit BitRows(int n);

  /// Graph formed by the edges of `c` that carry `color`.
  static BitRows color_class(const EdgeColoring& c, Color color);

  int n() const noexcept { return n_; }
  int words() const noexcept { return words_; }

  void set(int i, int j) noexcept {
    bits_[index(i, j)] |= bit(j);
    bits_[index(j, i)] |= bit(i);
  }
  void clear(int i, int j) noexcept {
    bits_[index(i, j)] &= ~bit(j);
    bits_[index(j, i)] &= ~bit(i);
  }
  bool test(int i, int j) const noexcept { return (bits_[index(i, j)] & bit(j)) != 0; }
  const std::uint64_t* row(int i) const noexcept {
    return bits_.data() + static_cast<std::size_t>(i) * words_;
  }

 private:
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * words_ + static_cast<std::size_t>(j >> 6);
  }
  static std::uint64_t bit(int j) noexcept { return std::uint64_t{1} << (j & 63); }

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Backtracking subgraph matcher for a fixed (non-induced) pattern.
///
/// Pattern vertices are placed in a static order: the highest-degree vertex
/// first, then repeatedly the vertex with the most already-placed neighbors
/// (ties: higher degree, then lower index). Candidates at each step are the
/// intersection of the host rows of placed neighbors, scanned in ascending
/// host order, so the first embedding found is the lexicographically least
/// sequence (map[order[0]], map[order[1]], ...).
class Matcher {
 public:
  explicit Matcher(const Pattern& p);

  const Pattern& pattern() const noexcept { return pattern_; }
  const std::vector<int>& order() const noexcept { return full_.order; }

  /// First embedding in `host`; map is indexed by pattern vertex.
  bool find(const BitRows& host, std::vector<int>& map, std::uint64_t& nodes) const;

  /// First embedding that sends some pattern edge onto host edge {u, v}.
  bool find_through(const BitRows& host, int u, int v, std::vector<int>& map,
                    std::uint64_t& nodes) const;

  /// Visits every embedding; the visitor returns false to stop early.
  void for_each(const BitRows& host, const std::function<bool(const std::vector<int>&)>& visit) const;

 private:
  struct Plan {
    std::vector<int> order;
    std::vector<std::vector<int>> back;  // placed pattern neighbors of order[t]
  };

  static Plan make_plan(const Pattern& p, std::vector<int> prefix);
  bool run(const Plan& plan, const BitRows& host, int start_depth, std::vector<int>& map,
           std::uint64_t& nodes,
           const std::function<bool(const std::vector<int>&)>* visit) const;

  Pattern pattern_;
  Plan full_;
  std::vector<std::pair<std::pair<int, int>, Plan>> anchored_;
};

}  // namespace gr::detail
