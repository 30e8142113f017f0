#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gr/coloring.hpp"
#include "gr/pattern.hpp"

namespace gr {

enum class SearchMode {
  FirstWitness,    // stop at the first avoiding coloring
  ProveExhausted,  // walk the whole tree; bounded by kEnumerationCap
};

/// Colorings of K_n with k = per_color.size() colors; color c must avoid a
/// monochromatic per_color[c-1] (nullopt: unconstrained).
struct SearchProblem {
  int n = 0;
  std::vector<std::optional<PatternId>> per_color;
  bool require_gallai = false;
  SearchMode mode = SearchMode::FirstWitness;

  int k() const noexcept { return static_cast<int>(per_color.size()); }
};

struct SearchOutcome {
  enum class Kind { Witness, Exhausted };

  Kind kind = Kind::Exhausted;
  /// Lexicographically least avoiding coloring (edges in lexicographic
  /// order, lower colors first).
  std::optional<EdgeColoring> witness;
  std::uint64_t nodes_explored = 0;
  /// First edge pinned to color 1; only when every color has the same rule.
  bool symmetry_reduced = false;
  /// ProveExhausted only: avoiding colorings found (after symmetry reduction).
  std::uint64_t witness_count = 0;
};

/// Raw search space k^C(n,2) allowed in ProveExhausted mode.
inline constexpr double kEnumerationCap = 16777216.0;  // 2^24

/// Backtracking over edges in lexicographic order. Each new edge is checked
/// against rainbow triangles and against pattern copies through that edge,
/// so the tree is cut as soon as a constraint is violated. Top-level
/// branches may run in parallel; the outcome does not depend on it.
///
/// ScopeExceeded in ProveExhausted mode past kEnumerationCap.
SearchOutcome exhaustive_check(const SearchProblem& p);

/// DIMACS CNF for a SearchProblem.
///
/// Variable (e, c) = (e - 1) * k + c, edges numbered from 1 in lexicographic
/// order (0,1), (0,2), ..., (n-2, n-1). Clause groups, in emission order:
/// at-least-one color per edge, pairwise at-most-one per edge, one blocking
/// clause per triangle and ordered triple of distinct colors (Gallai, k >= 3),
/// and one clause per distinct edge-image of each forbidden pattern.
struct CnfDocument {
  int n = 0;
  int k = 0;
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
  std::size_t alo_clauses = 0;
  std::size_t amo_clauses = 0;
  std::size_t rainbow_clauses = 0;
  std::size_t pattern_clauses = 0;
};

int edge_index(int n, int i, int j);  // 1-based, i < j
int cnf_variable(int n, int k, int i, int j, Color c);

/// InvalidArgument when a forbidden pattern has no edges.
CnfDocument encode_cnf(const SearchProblem& p);

/// Text with `c` comment lines documenting the variable map.
std::string to_dimacs(const CnfDocument& doc);

/// Reads `p cnf` text; n and k come from the `c grc-cnf` comment line that
/// to_dimacs writes (SyntaxError when absent).
CnfDocument parse_dimacs(std::string_view text);

/// Reads a solver model: `v` lines or bare literals, 0 terminators ignored.
std::vector<int> parse_model(std::string_view text);

/// Coloring selected by a model. Unmentioned variables count as false.
/// NotExactlyOne (detail = edge endpoints) when an edge has zero or several
/// true color variables.
EdgeColoring decode_assignment(const CnfDocument& doc, const std::vector<int>& assignment, int n,
                               int k);

/// True when every clause has a true literal under `assignment`.
bool satisfies(const CnfDocument& doc, const std::vector<int>& assignment);

}  // namespace gr
