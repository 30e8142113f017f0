#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "gr/error.hpp"
#include "gr/search.hpp"

namespace gr {

int edge_index(int n, int i, int j) {
  // Edges before row i: (n-1) + (n-2) + ... + (n-i).
  return i * (2 * n - i - 1) / 2 + (j - i);
}

int cnf_variable(int n, int k, int i, int j, Color c) { return (edge_index(n, i, j) - 1) * k + c; }

namespace {

// Every distinct edge set (as sorted 1-based edge indices) that `pattern`
// occupies in K_n, by enumerating injective vertex maps.
std::set<std::vector<int>> edge_images(const Pattern& pattern, int n) {
  std::set<std::vector<int>> images;
  std::vector<int> map(pattern.m, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int v) -> void {
    if (v == pattern.m) {
      std::vector<int> image;
      image.reserve(pattern.edges.size());
      for (auto [a, b] : pattern.edges)
        image.push_back(edge_index(n, std::min(map[a], map[b]), std::max(map[a], map[b])));
      std::sort(image.begin(), image.end());
      images.insert(std::move(image));
      return;
    }
    for (int x = 0; x < n; ++x) {
      if (used[x]) continue;
      used[x] = true;
      map[v] = x;
      self(self, v + 1);
      used[x] = false;
    }
  };
  if (pattern.m <= n) rec(rec, 0);
  return images;
}

}  // namespace

CnfDocument encode_cnf(const SearchProblem& p) {
  if (p.n < 2) throw Error(ErrorCode::InvalidArgument, "encoding needs n >= 2");
  if (p.k() < 1) throw Error(ErrorCode::InvalidArgument, "encoding needs k >= 1");
  CnfDocument doc;
  doc.n = p.n;
  doc.k = p.k();
  const int n = p.n;
  const int k = p.k();
  const int edges = n * (n - 1) / 2;
  doc.num_vars = edges * k;
  auto var = [&](int i, int j, Color c) { return cnf_variable(n, k, i, j, c); };

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> clause;
      for (Color c = 1; c <= k; ++c) clause.push_back(var(i, j, c));
      doc.clauses.push_back(std::move(clause));
      ++doc.alo_clauses;
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (Color a = 1; a <= k; ++a)
        for (Color b = a + 1; b <= k; ++b) {
          doc.clauses.push_back({-var(i, j, a), -var(i, j, b)});
          ++doc.amo_clauses;
        }
  if (p.require_gallai && k >= 3) {
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        for (int z = y + 1; z < n; ++z)
          for (Color a = 1; a <= k; ++a)
            for (Color b = 1; b <= k; ++b)
              for (Color c = 1; c <= k; ++c) {
                if (a == b || a == c || b == c) continue;
                doc.clauses.push_back({-var(x, y, a), -var(x, z, b), -var(y, z, c)});
                ++doc.rainbow_clauses;
              }
  }
  for (Color c = 1; c <= k; ++c) {
    const auto& id = p.per_color[c - 1];
    if (!id) continue;
    Pattern pattern = resolve(*id);
    if (pattern.edges.empty())
      throw Error(ErrorCode::InvalidArgument,
                  "pattern " + id->to_string() + " has no edges; its blocking clause would be empty");
    for (const auto& image : edge_images(pattern, n)) {
      std::vector<int> clause;
      for (int e : image) clause.push_back(-((e - 1) * k + c));
      doc.clauses.push_back(std::move(clause));
      ++doc.pattern_clauses;
    }
  }
  return doc;
}

std::string to_dimacs(const CnfDocument& doc) {
  std::ostringstream out;
  out << "c grc-cnf n " << doc.n << " k " << doc.k << "\n";
  out << "c var(e, color) = (e - 1) * k + color; edges e = 1.. in lexicographic order\n";
  for (int i = 0; i < doc.n; ++i)
    for (int j = i + 1; j < doc.n; ++j)
      out << "c edge " << edge_index(doc.n, i, j) << " " << i << " " << j << "\n";
  out << "c groups alo " << doc.alo_clauses << " amo " << doc.amo_clauses << " rainbow "
      << doc.rainbow_clauses << " pattern " << doc.pattern_clauses << "\n";
  out << "p cnf " << doc.num_vars << " " << doc.clauses.size() << "\n";
  for (const auto& clause : doc.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

CnfDocument parse_dimacs(std::string_view text) {
  CnfDocument doc;
  bool have_meta = false;
  bool have_header = false;
  std::size_t declared = 0;
  std::vector<int> current;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "c") {
      std::string tag;
      ls >> tag;
      if (tag == "grc-cnf") {
        std::string n_key, k_key;
        if (!(ls >> n_key >> doc.n >> k_key >> doc.k) || n_key != "n" || k_key != "k")
          throw Error(ErrorCode::SyntaxError, "malformed grc-cnf comment");
        have_meta = true;
      } else if (tag == "groups") {
        std::string a, b, c, d;
        ls >> a >> doc.alo_clauses >> b >> doc.amo_clauses >> c >> doc.rainbow_clauses >> d >>
            doc.pattern_clauses;
      }
      continue;
    }
    if (head == "p") {
      std::string fmt;
      if (!(ls >> fmt >> doc.num_vars >> declared) || fmt != "cnf")
        throw Error(ErrorCode::SyntaxError, "malformed problem line");
      have_header = true;
      continue;
    }
    if (!have_header) throw Error(ErrorCode::SyntaxError, "clause before 'p cnf' line");
    std::istringstream cs(line);
    int lit = 0;
    while (cs >> lit) {
      if (lit == 0) {
        doc.clauses.push_back(std::move(current));
        current.clear();
      } else {
        if (std::abs(lit) > doc.num_vars)
          throw Error(ErrorCode::SyntaxError, "literal " + std::to_string(lit) + " out of range");
        current.push_back(lit);
      }
    }
    if (!cs.eof()) throw Error(ErrorCode::SyntaxError, "bad clause line '" + line + "'");
  }
  if (!have_meta) throw Error(ErrorCode::SyntaxError, "missing 'c grc-cnf n <n> k <k>' line");
  if (!have_header) throw Error(ErrorCode::SyntaxError, "missing 'p cnf' line");
  if (!current.empty()) throw Error(ErrorCode::SyntaxError, "last clause is not 0-terminated");
  if (doc.clauses.size() != declared)
    throw Error(ErrorCode::SyntaxError, "clause count differs from the problem line");
  return doc;
}

std::vector<int> parse_model(std::string_view text) {
  std::vector<int> literals;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string token;
    bool first = true;
    while (ls >> token) {
      if (first && token == "v") {
        first = false;
        continue;
      }
      int lit = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), lit);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        if (first) break;  // status or comment line: s SATISFIABLE, SAT, c ...
        throw Error(ErrorCode::SyntaxError, "bad literal '" + token + "' in model");
      }
      first = false;
      if (lit != 0) literals.push_back(lit);
    }
  }
  return literals;
}

EdgeColoring decode_assignment(const CnfDocument& doc, const std::vector<int>& assignment, int n,
                               int k) {
  if (doc.n != n || doc.k != k)
    throw Error(ErrorCode::InvalidArgument, "document encodes n=" + std::to_string(doc.n) +
                                                ", k=" + std::to_string(doc.k));
  std::vector<bool> truth(static_cast<std::size_t>(doc.num_vars) + 1, false);
  for (int lit : assignment) {
    if (lit == 0 || std::abs(lit) > doc.num_vars)
      throw Error(ErrorCode::InvalidArgument, "literal " + std::to_string(lit) + " out of range");
    truth[std::abs(lit)] = lit > 0;
  }
  ColoringBuilder builder(n, k);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Color chosen = 0;
      int count = 0;
      for (Color c = 1; c <= k; ++c)
        if (truth[cnf_variable(n, k, i, j, c)]) {
          chosen = c;
          ++count;
        }
      if (count != 1)
        throw Error(ErrorCode::NotExactlyOne,
                    "edge (" + std::to_string(i) + ", " + std::to_string(j) + ") has " +
                        std::to_string(count) + " true color variables",
                    {i, j});
      builder.set(i, j, chosen);
    }
  return std::move(builder).build();
}

bool satisfies(const CnfDocument& doc, const std::vector<int>& assignment) {
  std::vector<bool> truth(static_cast<std::size_t>(doc.num_vars) + 1, false);
  for (int lit : assignment)
    if (lit != 0 && std::abs(lit) <= doc.num_vars) truth[std::abs(lit)] = lit > 0;
  return std::all_of(doc.clauses.begin(), doc.clauses.end(), [&](const std::vector<int>& clause) {
    return std::any_of(clause.begin(), clause.end(),
                       [&](int lit) { return lit > 0 ? truth[lit] : !truth[-lit]; });
  });
}

}  // namespace gr
