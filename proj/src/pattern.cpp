#include "gr/pattern.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "gr/error.hpp"

namespace gr {

namespace {

constexpr int kBruteForceLimit = 10;

// Edge lists read from the catalog figure, vertices 1..5 as drawn.
const std::vector<std::vector<std::pair<int, int>>> kCatalogEdges = {
    {{2, 1}, {2, 3}, {2, 5}, {5, 1}, {3, 4}},                  // h1
    {{2, 1}, {2, 3}, {2, 4}, {2, 5}, {5, 1}},                  // h2
    {{2, 1}, {2, 3}, {2, 5}, {5, 1}, {5, 4}},                  // h3
    {{2, 1}, {2, 3}, {2, 5}, {5, 1}, {5, 4}, {3, 4}},          // h4
    {{2, 1}, {2, 3}, {2, 5}, {5, 3}, {5, 4}, {3, 4}},          // h5
    {{2, 3}, {2, 5}, {5, 1}, {5, 3}, {5, 4}, {3, 4}},          // h6
    {{2, 1}, {2, 3}, {2, 4}, {2, 5}, {5, 1}, {5, 3}, {5, 4}},  // h7
    {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 5}, {5, 4}, {3, 4}},  // h8
    {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {4, 5}},          // h9
    {{1, 2}, {1, 5}, {2, 5}, {3, 4}},                          // h10
    {{2, 1}, {2, 3}, {2, 4}, {3, 4}, {5, 1}, {5, 3}, {5, 4}},  // h11
    {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 3}, {1, 4}},  // h12
};

std::string_view family_name(PatternFamily f) {
  switch (f) {
    case PatternFamily::Catalog: return "h";
    case PatternFamily::Kipas: return "kipas";
    case PatternFamily::Path: return "path";
    case PatternFamily::Star: return "star";
    case PatternFamily::Cycle: return "cycle";
    case PatternFamily::Complete: return "complete";
  }
  return "?";
}

int min_param(PatternFamily f) {
  switch (f) {
    case PatternFamily::Catalog: return 1;
    case PatternFamily::Kipas: return 2;
    case PatternFamily::Path: return 1;
    case PatternFamily::Star: return 1;
    case PatternFamily::Cycle: return 3;
    case PatternFamily::Complete: return 1;
  }
  return 1;
}

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw Error(ErrorCode::UnknownPattern, "cannot parse pattern '" + std::string(whole) + "'");
  return value;
}

void check_param(PatternId id) {
  bool ok = id.param >= min_param(id.family);
  if (id.family == PatternFamily::Catalog) ok = ok && id.param <= 12;
  // Patterns are matched by backtracking; keep them small enough to be practical.
  if (id.family != PatternFamily::Catalog) ok = ok && id.param <= 64;
  if (!ok)
    throw Error(ErrorCode::ParameterOutOfRange,
                "parameter out of range for pattern " + id.to_string());
}

}  // namespace

PatternId PatternId::parse(std::string_view text) {
  if (text == "p3") return path(3);
  if (text == "k3") return complete(3);
  if (text.size() >= 2 && text[0] == 'h' && text.find('(') == std::string_view::npos) {
    PatternId id = h(parse_int(text.substr(1), text));
    check_param(id);
    return id;
  }
  auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')')
    throw Error(ErrorCode::UnknownPattern, "unknown pattern '" + std::string(text) + "'");
  auto name = text.substr(0, open);
  int value = parse_int(text.substr(open + 1, text.size() - open - 2), text);
  for (auto f : {PatternFamily::Kipas, PatternFamily::Path, PatternFamily::Star,
                 PatternFamily::Cycle, PatternFamily::Complete}) {
    if (name == family_name(f)) {
      PatternId id{f, value};
      check_param(id);
      return id;
    }
  }
  throw Error(ErrorCode::UnknownPattern, "unknown pattern family '" + std::string(name) + "'");
}

std::string PatternId::to_string() const {
  if (family == PatternFamily::Catalog) return "h" + std::to_string(param);
  return std::string(family_name(family)) + "(" + std::to_string(param) + ")";
}

Pattern make_pattern(int m, std::vector<std::pair<int, int>> edges, std::string label) {
  if (m < 1) throw Error(ErrorCode::UnknownPattern, "pattern needs at least one vertex");
  for (auto& [a, b] : edges) {
    if (a == b || a < 0 || b < 0 || a >= m || b >= m)
      throw Error(ErrorCode::UnknownPattern, "invalid edge in pattern " + label, {a, b});
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw Error(ErrorCode::UnknownPattern, "duplicate edge in pattern " + label);
  return Pattern{m, std::move(edges), std::move(label)};
}

Pattern resolve(PatternId id) {
  check_param(id);
  std::vector<std::pair<int, int>> edges;
  int m = 0;
  const int p = id.param;
  switch (id.family) {
    case PatternFamily::Catalog:
      m = 5;
      for (auto [a, b] : kCatalogEdges[p - 1]) edges.emplace_back(a - 1, b - 1);
      break;
    case PatternFamily::Kipas:
      m = p + 1;
      for (int i = 1; i <= p; ++i) edges.emplace_back(0, i);
      for (int i = 1; i < p; ++i) edges.emplace_back(i, i + 1);
      break;
    case PatternFamily::Path:
      m = p;
      for (int i = 0; i + 1 < p; ++i) edges.emplace_back(i, i + 1);
      break;
    case PatternFamily::Star:
      m = p + 1;
      for (int i = 1; i <= p; ++i) edges.emplace_back(0, i);
      break;
    case PatternFamily::Cycle:
      m = p;
      for (int i = 0; i < p; ++i) edges.emplace_back(i, (i + 1) % p);
      break;
    case PatternFamily::Complete:
      m = p;
      for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) edges.emplace_back(i, j);
      break;
  }
  return make_pattern(m, std::move(edges), id.to_string());
}

std::vector<PatternId> catalog_ids() {
  std::vector<PatternId> ids;
  for (int i = 1; i <= 12; ++i) ids.push_back(PatternId::h(i));
  return ids;
}

namespace {

std::vector<std::vector<bool>> adjacency(const Pattern& p) {
  std::vector<std::vector<bool>> adj(p.m, std::vector<bool>(p.m, false));
  for (auto [a, b] : p.edges) adj[a][b] = adj[b][a] = true;
  return adj;
}

std::vector<int> sorted_degrees(const Pattern& p) {
  std::vector<int> deg(p.m, 0);
  for (auto [a, b] : p.edges) ++deg[a], ++deg[b];
  std::sort(deg.begin(), deg.end());
  return deg;
}

}  // namespace

bool are_isomorphic(const Pattern& p, const Pattern& q) {
  if (p.m > kBruteForceLimit || q.m > kBruteForceLimit)
    throw Error(ErrorCode::TooLarge, "isomorphism test limited to 10 vertices");
  if (p.m != q.m || p.edges.size() != q.edges.size()) return false;
  if (sorted_degrees(p) != sorted_degrees(q)) return false;
  auto adj_q = adjacency(q);
  std::vector<int> perm(p.m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = std::all_of(p.edges.begin(), p.edges.end(),
                          [&](auto e) { return adj_q[perm[e.first]][perm[e.second]]; });
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

namespace {

bool colorable(const std::vector<std::vector<bool>>& adj, std::vector<int>& assign, int v,
               int colors) {
  int m = static_cast<int>(adj.size());
  if (v == m) return true;
  // Symmetry: vertex v may open at most one new color.
  int max_used = 0;
  for (int u = 0; u < v; ++u) max_used = std::max(max_used, assign[u]);
  for (int c = 1; c <= std::min(colors, max_used + 1); ++c) {
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      if (adj[v][u] && assign[u] == c) ok = false;
    if (!ok) continue;
    assign[v] = c;
    if (colorable(adj, assign, v + 1, colors)) return true;
  }
  assign[v] = 0;
  return false;
}

}  // namespace

int chromatic_number(const Pattern& p) {
  if (p.m > kBruteForceLimit)
    throw Error(ErrorCode::TooLarge, "chromatic number limited to 10 vertices");
  auto adj = adjacency(p);
  std::vector<int> assign(p.m, 0);
  for (int colors = 1; colors < p.m; ++colors)
    if (colorable(adj, assign, 0, colors)) return colors;
  return p.m;
}

}  // namespace gr
