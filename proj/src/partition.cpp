#include "gr/partition.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "gr/detection.hpp"
#include "gr/error.hpp"

namespace gr {

namespace {

using Parts = std::vector<std::vector<int>>;

void normalize(Parts& parts) {
  for (auto& part : parts) std::sort(part.begin(), part.end());
  std::sort(parts.begin(), parts.end());
}

// Quotient colors, or nullopt when some pair of parts is not joined uniformly.
std::optional<EdgeColoring> quotient_of(const EdgeColoring& c, const Parts& parts,
                                        std::vector<int>* bad_pair = nullptr) {
  const int ell = static_cast<int>(parts.size());
  ColoringBuilder builder(ell, c.k());
  for (int a = 0; a < ell; ++a) {
    for (int b = a + 1; b < ell; ++b) {
      const Color color = c(parts[a][0], parts[b][0]);
      for (int x : parts[a])
        for (int y : parts[b])
          if (c(x, y) != color) {
            if (bad_pair) *bad_pair = {a, b};
            return std::nullopt;
          }
      builder.set(a, b, color);
    }
  }
  return std::move(builder).build();
}

// Components of the graph formed by edges whose color differs from `color`.
Parts components_avoiding(const EdgeColoring& c, Color color) {
  const int n = c.n();
  std::vector<int> comp(n, -1);
  Parts parts;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(parts.size());
    parts.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      parts[id].push_back(v);
      for (int w = 0; w < n; ++w)
        if (w != v && comp[w] < 0 && c(v, w) != color) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
  }
  return parts;
}

// Refines {{seed}, V \ {seed}} until every part is a module: no outside
// vertex sees two colors into it.
Parts refine_from(const EdgeColoring& c, int seed) {
  const int n = c.n();
  Parts parts{{seed}, {}};
  for (int v = 0; v < n; ++v)
    if (v != seed) parts[1].push_back(v);
  std::vector<int> owner(n, 1);
  owner[seed] = 0;

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p < parts.size() && !changed; ++p) {
      const auto& part = parts[p];
      if (part.size() < 2) continue;
      for (int w = 0; w < n && !changed; ++w) {
        if (owner[w] == static_cast<int>(p)) continue;
        const Color first = c(w, part[0]);
        bool splits = std::any_of(part.begin() + 1, part.end(),
                                  [&](int x) { return c(w, x) != first; });
        if (!splits) continue;
        std::vector<std::vector<int>> by_color(c.k() + 1);
        for (int x : part) by_color[c(w, x)].push_back(x);
        std::vector<int> keep;
        bool kept = false;
        for (auto& group : by_color) {
          if (group.empty()) continue;
          if (!kept) {
            keep = std::move(group);
            kept = true;
            continue;
          }
          for (int x : group) owner[x] = static_cast<int>(parts.size());
          parts.push_back(std::move(group));
        }
        parts[p] = std::move(keep);
        changed = true;
      }
    }
  }
  return parts;
}

// Smallest module containing `start`: absorb any vertex that sees two
// colors into the current set.
bool closure_is_everything(const EdgeColoring& c, const std::vector<int>& start) {
  const int n = c.n();
  std::vector<bool> inside(n, false);
  std::vector<Color> seen(n, 0);
  std::vector<bool> splitter(n, false);
  std::vector<int> pending;
  int size = 0;
  auto add = [&](int x) {
    inside[x] = true;
    ++size;
    for (int w = 0; w < n; ++w) {
      if (inside[w] || splitter[w]) continue;
      if (seen[w] == 0) {
        seen[w] = c(w, x);
      } else if (seen[w] != c(w, x)) {
        splitter[w] = true;
        pending.push_back(w);
      }
    }
  };
  for (int x : start) add(x);
  while (!pending.empty()) {
    int w = pending.back();
    pending.pop_back();
    if (!inside[w]) add(w);
  }
  return size == n;
}

// Maximal proper modules when the top level is prime, found from one seed.
Parts maximal_modules_from(const EdgeColoring& c, int seed) {
  Parts refined = refine_from(c, seed);
  std::vector<int> seed_module{seed};
  Parts result;
  for (std::size_t p = 1; p < refined.size(); ++p) {
    std::vector<int> probe = refined[p];
    probe.push_back(seed);
    if (closure_is_everything(c, probe)) {
      result.push_back(refined[p]);
    } else {
      seed_module.insert(seed_module.end(), refined[p].begin(), refined[p].end());
    }
  }
  result.push_back(std::move(seed_module));
  normalize(result);
  return result;
}

bool better(const Parts& a, const Parts& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

GallaiPartition gallai_partition(const EdgeColoring& c, const PartitionOptions& options) {
  if (c.n() < 2) throw Error(ErrorCode::TooSmall, "a Gallai partition needs n >= 2");
  if (auto t = find_rainbow_triangle(c)) {
    throw Error(ErrorCode::RainbowTriangle,
                "rainbow triangle on (" + std::to_string((*t)[0]) + ", " +
                    std::to_string((*t)[1]) + ", " + std::to_string((*t)[2]) + ")",
                {(*t)[0], (*t)[1], (*t)[2]});
  }

  std::optional<Parts> best;
  auto offer = [&](Parts parts) {
    normalize(parts);
    auto q = quotient_of(c, parts);
    if (!q || q->colors_used().size() > 2) return;
    if (!best || better(parts, *best)) best = std::move(parts);
  };

  // Degenerate top level: one color joins several blocks; two parts suffice.
  for (Color color : c.colors_used()) {
    Parts comps = components_avoiding(c, color);
    if (comps.size() < 2) continue;
    for (const auto& comp : comps) {
      std::vector<bool> in(c.n(), false);
      for (int v : comp) in[v] = true;
      std::vector<int> rest;
      for (int v = 0; v < c.n(); ++v)
        if (!in[v]) rest.push_back(v);
      offer({comp, rest});
    }
  }

  if (!best) {
    const int seeds = options.seed_cap > 0 ? std::min(options.seed_cap, c.n()) : c.n();
    for (int v = 0; v < seeds; ++v) offer(maximal_modules_from(c, v));
  }

  if (!best) {
    if (c.colors_used().size() > 2)
      throw Error(ErrorCode::InternalInvariantViolation,
                  "no candidate partition has a quotient with at most two colors");
    Parts singletons(c.n());
    for (int v = 0; v < c.n(); ++v) singletons[v] = {v};
    best = std::move(singletons);
  }

  GallaiPartition result;
  result.parts = std::move(*best);
  result.quotient = *quotient_of(c, result.parts);
  return result;
}

EdgeColoring reduced_coloring(const EdgeColoring& c, const GallaiPartition& p) {
  std::vector<int> owner(c.n(), -1);
  for (std::size_t a = 0; a < p.parts.size(); ++a) {
    if (p.parts[a].empty()) throw Error(ErrorCode::InvalidPartition, "empty part");
    for (int v : p.parts[a]) {
      if (v < 0 || v >= c.n())
        throw Error(ErrorCode::InvalidPartition, "vertex " + std::to_string(v) + " out of range");
      if (owner[v] >= 0)
        throw Error(ErrorCode::InvalidPartition, "vertex " + std::to_string(v) + " in two parts");
      owner[v] = static_cast<int>(a);
    }
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end())
    throw Error(ErrorCode::InvalidPartition, "parts do not cover every vertex");
  if (c.n() >= 2 && p.parts.size() < 2)
    throw Error(ErrorCode::InvalidPartition, "need at least two parts");

  std::vector<int> bad;
  auto q = quotient_of(c, p.parts, &bad);
  if (!q)
    throw Error(ErrorCode::InvalidPartition,
                "parts " + std::to_string(bad[0]) + " and " + std::to_string(bad[1]) +
                    " are joined in more than one color",
                bad);
  if (q->colors_used().size() > 2)
    throw Error(ErrorCode::InvalidPartition, "quotient uses more than two colors");
  return *q;
}

}  // namespace gr
