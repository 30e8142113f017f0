#include "gr/search.hpp"

#include <cmath>

#include "gr/error.hpp"
#include "gr/parallel.hpp"
#include "matcher.hpp"
#include "parallel_for.hpp"

namespace gr {

namespace {

class Engine {
 public:
  explicit Engine(const SearchProblem& p) : n_(p.n), k_(p.k()), gallai_(p.require_gallai && p.k() >= 3) {
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) edges_.push_back({i, j});
    assigned_.assign(static_cast<std::size_t>(n_) * n_, 0);
    rows_.assign(k_ + 1, detail::BitRows(n_));
    matchers_.resize(k_ + 1);
    for (int c = 1; c <= k_; ++c) {
      const auto& id = p.per_color[c - 1];
      if (!id) continue;
      Pattern pattern = resolve(*id);
      if (pattern.m <= n_) matchers_[c].emplace(pattern);
    }
    count_all_ = p.mode == SearchMode::ProveExhausted;
  }

  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Colors edge e; returns false (and leaves it uncolored) on a violation.
  bool assign(int e, Color c) {
    auto [u, v] = edges_[e];
    ++nodes_;
    if (gallai_) {
      for (int w = 0; w < n_; ++w) {
        if (w == u || w == v) continue;
        const Color a = at(u, w);
        const Color b = at(v, w);
        if (a && b && a != c && b != c && a != b) return false;
      }
    }
    rows_[c].set(u, v);
    if (matchers_[c]) {
      std::vector<int> map;
      std::uint64_t ignored = 0;
      if (matchers_[c]->find_through(rows_[c], u, v, map, ignored)) {
        rows_[c].clear(u, v);
        return false;
      }
    }
    set_at(u, v, c);
    return true;
  }

  void unassign(int e) {
    auto [u, v] = edges_[e];
    rows_[at(u, v)].clear(u, v);
    set_at(u, v, 0);
  }

  // Depth-first from edge `e`; returns true to stop.
  bool dfs(int e) {
    if (e == edge_count()) {
      ++witnesses_;
      if (!first_) first_ = snapshot();
      return !count_all_;
    }
    for (Color c = 1; c <= k_; ++c) {
      if (!assign(e, c)) continue;
      bool stop = dfs(e + 1);
      unassign(e);
      if (stop) return true;
    }
    return false;
  }

  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t witnesses() const { return witnesses_; }
  const std::optional<EdgeColoring>& first() const { return first_; }

 private:
  Color at(int u, int v) const { return assigned_[static_cast<std::size_t>(u) * n_ + v]; }
  void set_at(int u, int v, Color c) {
    assigned_[static_cast<std::size_t>(u) * n_ + v] = c;
    assigned_[static_cast<std::size_t>(v) * n_ + u] = c;
  }
  EdgeColoring snapshot() const {
    ColoringBuilder builder(n_, k_);
    for (auto [u, v] : edges_) builder.set(u, v, at(u, v));
    return std::move(builder).build();
  }

  int n_;
  int k_;
  bool gallai_;
  bool count_all_ = false;
  std::vector<std::pair<int, int>> edges_;
  std::vector<Color> assigned_;
  std::vector<detail::BitRows> rows_;
  std::vector<std::optional<detail::Matcher>> matchers_;
  std::uint64_t nodes_ = 0;
  std::uint64_t witnesses_ = 0;
  std::optional<EdgeColoring> first_;
};

bool all_rules_equal(const SearchProblem& p) {
  for (const auto& id : p.per_color)
    if (id != p.per_color.front()) return false;
  return p.k() >= 2;
}

}  // namespace

SearchOutcome exhaustive_check(const SearchProblem& p) {
  if (p.n < 1) throw Error(ErrorCode::InvalidArgument, "search needs n >= 1");
  if (p.k() < 1 || p.k() > kMaxColors)
    throw Error(ErrorCode::InvalidArgument, "search needs 1 <= k <= 255");
  const int edges = p.n * (p.n - 1) / 2;
  if (p.mode == SearchMode::ProveExhausted &&
      edges * std::log2(static_cast<double>(p.k())) > std::log2(kEnumerationCap) + 1e-9) {
    throw Error(ErrorCode::ScopeExceeded, "k^C(n,2) exceeds the enumeration cap of 2^24");
  }

  SearchOutcome outcome;
  // An edgeless forbidden pattern that fits is present in every coloring.
  for (const auto& id : p.per_color) {
    if (!id) continue;
    Pattern pattern = resolve(*id);
    if (pattern.edges.empty() && pattern.m <= p.n) return outcome;
  }

  outcome.symmetry_reduced = all_rules_equal(p) && edges >= 1;

  // Top-level branches: the color of the first free edge.
  struct Branch {
    std::vector<Color> prefix;
  };
  std::vector<Branch> branches;
  if (edges == 0) {
    branches.push_back({});
  } else if (outcome.symmetry_reduced) {
    if (edges == 1) {
      branches.push_back({{1}});
    } else {
      for (Color c = 1; c <= p.k(); ++c) branches.push_back({{1, c}});
    }
  } else {
    for (Color c = 1; c <= p.k(); ++c) branches.push_back({{c}});
  }

  struct Result {
    std::uint64_t nodes = 0;
    std::uint64_t witnesses = 0;
    std::optional<EdgeColoring> first;
  };
  std::vector<Result> results(branches.size());
  auto run_branch = [&](int b) {
    Engine engine(p);
    const auto& prefix = branches[b].prefix;
    bool ok = true;
    for (std::size_t e = 0; e < prefix.size() && ok; ++e) ok = engine.assign(static_cast<int>(e), prefix[e]);
    if (ok) engine.dfs(static_cast<int>(prefix.size()));
    results[b] = {engine.nodes(), engine.witnesses(), engine.first()};
  };

  const bool first_only = p.mode == SearchMode::FirstWitness;
  if (first_only && thread_count() <= 1) {
    for (std::size_t b = 0; b < branches.size(); ++b) {
      run_branch(static_cast<int>(b));
      if (results[b].first) break;
    }
  } else {
    detail::parallel_for(static_cast<int>(branches.size()), run_branch);
  }

  for (auto& r : results) {
    outcome.nodes_explored += r.nodes;
    outcome.witness_count += r.witnesses;
    if (r.first && !outcome.witness) {
      outcome.witness = std::move(r.first);
      if (first_only) break;
    }
  }
  if (first_only) outcome.witness_count = 0;
  outcome.kind = outcome.witness ? SearchOutcome::Kind::Witness : SearchOutcome::Kind::Exhausted;
  return outcome;
}

}  // namespace gr
