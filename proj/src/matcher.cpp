#include "matcher.hpp"

#include <algorithm>
#include <bit>

namespace gr::detail {

BitRows::BitRows(int n) : n_(n), words_((n + 63) / 64) {
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

BitRows BitRows::color_class(const EdgeColoring& c, Color color) {
  BitRows rows(c.n());
  for (int i = 0; i < c.n(); ++i)
    for (int j = i + 1; j < c.n(); ++j)
      if (c(i, j) == color) rows.set(i, j);
  return rows;
}

Matcher::Matcher(const Pattern& p) : pattern_(p), full_(make_plan(p, {})) {
  for (auto [a, b] : p.edges) {
    anchored_.push_back({{a, b}, make_plan(p, {a, b})});
    anchored_.push_back({{b, a}, make_plan(p, {b, a})});
  }
}

Matcher::Plan Matcher::make_plan(const Pattern& p, std::vector<int> prefix) {
  std::vector<std::vector<bool>> adj(p.m, std::vector<bool>(p.m, false));
  std::vector<int> degree(p.m, 0);
  for (auto [a, b] : p.edges) {
    adj[a][b] = adj[b][a] = true;
    ++degree[a];
    ++degree[b];
  }
  Plan plan;
  std::vector<bool> placed(p.m, false);
  auto place = [&](int v) {
    std::vector<int> back;
    for (std::size_t t = 0; t < plan.order.size(); ++t)
      if (adj[v][plan.order[t]]) back.push_back(static_cast<int>(t));
    plan.order.push_back(v);
    plan.back.push_back(std::move(back));
    placed[v] = true;
  };
  for (int v : prefix) place(v);
  while (static_cast<int>(plan.order.size()) < p.m) {
    int best = -1;
    int best_links = -1;
    for (int v = 0; v < p.m; ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (int u : plan.order) links += adj[v][u] ? 1 : 0;
      if (links > best_links || (links == best_links && degree[v] > degree[best])) {
        best = v;
        best_links = links;
      }
    }
    place(best);
  }
  return plan;
}

bool Matcher::run(const Plan& plan, const BitRows& host, int start_depth, std::vector<int>& map,
                  std::uint64_t& nodes,
                  const std::function<bool(const std::vector<int>&)>* visit) const {
  const int m = pattern_.m;
  const int words = host.words();
  const int n = host.n();
  std::vector<int> image(m, -1);  // image[t] = host vertex of plan.order[t]
  for (int t = 0; t < start_depth; ++t) image[t] = map[plan.order[t]];

  std::vector<std::uint64_t> used(words, 0);
  for (int t = 0; t < start_depth; ++t) used[image[t] >> 6] |= std::uint64_t{1} << (image[t] & 63);

  std::vector<std::uint64_t> all(words, ~std::uint64_t{0});
  if (n % 64 != 0) all[words - 1] = (std::uint64_t{1} << (n % 64)) - 1;

  // cand[t] holds the remaining candidates at depth t.
  std::vector<std::vector<std::uint64_t>> cand(m, std::vector<std::uint64_t>(words));
  auto fill = [&](int t) {
    auto& cur = cand[t];
    if (plan.back[t].empty()) {
      for (int w = 0; w < words; ++w) cur[w] = all[w] & ~used[w];
      return;
    }
    const std::uint64_t* first = host.row(image[plan.back[t][0]]);
    for (int w = 0; w < words; ++w) cur[w] = first[w] & ~used[w];
    for (std::size_t b = 1; b < plan.back[t].size(); ++b) {
      const std::uint64_t* r = host.row(image[plan.back[t][b]]);
      for (int w = 0; w < words; ++w) cur[w] &= r[w];
    }
  };
  auto pop_lowest = [&](int t) -> int {
    auto& cur = cand[t];
    for (int w = 0; w < words; ++w) {
      if (cur[w]) {
        int bitpos = std::countr_zero(cur[w]);
        cur[w] &= cur[w] - 1;
        return w * 64 + bitpos;
      }
    }
    return -1;
  };

  if (start_depth == m) {
    if (visit) return !(*visit)(map);
    return true;
  }
  int depth = start_depth;
  fill(depth);
  while (depth >= start_depth) {
    if (image[depth] >= 0) {
      int prev = image[depth];
      used[prev >> 6] &= ~(std::uint64_t{1} << (prev & 63));
      image[depth] = -1;
    }
    int v = pop_lowest(depth);
    if (v < 0) {
      --depth;
      continue;
    }
    ++nodes;
    image[depth] = v;
    used[v >> 6] |= std::uint64_t{1} << (v & 63);
    if (depth + 1 == m) {
      for (int t = 0; t < m; ++t) map[plan.order[t]] = image[t];
      if (!visit) return true;
      if (!(*visit)(map)) return true;
      continue;
    }
    ++depth;
    fill(depth);
  }
  return false;
}

bool Matcher::find(const BitRows& host, std::vector<int>& map, std::uint64_t& nodes) const {
  if (pattern_.m > host.n()) return false;
  map.assign(pattern_.m, -1);
  return run(full_, host, 0, map, nodes, nullptr);
}

bool Matcher::find_through(const BitRows& host, int u, int v, std::vector<int>& map,
                           std::uint64_t& nodes) const {
  if (pattern_.m > host.n() || !host.test(u, v)) return false;
  for (const auto& [edge, plan] : anchored_) {
    map.assign(pattern_.m, -1);
    map[edge.first] = u;
    map[edge.second] = v;
    if (run(plan, host, 2, map, nodes, nullptr)) return true;
  }
  return false;
}

void Matcher::for_each(const BitRows& host,
                       const std::function<bool(const std::vector<int>&)>& visit) const {
  if (pattern_.m > host.n()) return;
  std::vector<int> map(pattern_.m, -1);
  std::uint64_t nodes = 0;
  run(full_, host, 0, map, nodes, &visit);
}

}  // namespace gr::detail
