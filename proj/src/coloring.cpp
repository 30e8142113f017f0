#include "gr/coloring.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <string>

#include "gr/error.hpp"

namespace gr {

namespace {

void check_budget(int k) {
  if (k < 1 || k > kMaxColors) {
    throw Error(ErrorCode::ColorOutOfRange,
                "color budget " + std::to_string(k) + " outside [1, " +
                    std::to_string(kMaxColors) + "]");
  }
}

std::string pair_text(int i, int j) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

}  // namespace

EdgeColoring EdgeColoring::monochromatic(int n, Color color, int k) {
  if (k == 0) k = color;
  ColoringBuilder builder(n, k);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) builder.set(i, j, color);
  return std::move(builder).build();
}

std::vector<Color> EdgeColoring::colors_used() const {
  std::vector<bool> seen(static_cast<std::size_t>(k_) + 1, false);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) seen[(*this)(i, j)] = true;
  std::vector<Color> used;
  for (Color c = 1; c <= k_; ++c)
    if (seen[c]) used.push_back(c);
  return used;
}

EdgeColoring EdgeColoring::with_k(int k) const {
  check_budget(k);
  auto used = colors_used();
  if (!used.empty() && used.back() > k) {
    throw Error(ErrorCode::ColorOutOfRange,
                "color " + std::to_string(used.back()) + " exceeds budget " + std::to_string(k));
  }
  return EdgeColoring(n_, k, cells_);
}

ColoringBuilder::ColoringBuilder(int n, int k) : n_(n), k_(k) {
  if (n < 1) throw Error(ErrorCode::VertexOutOfRange, "vertex count must be >= 1");
  check_budget(k);
  cells_.assign(static_cast<std::size_t>(n) * n, 0);
}

void ColoringBuilder::set(int i, int j, Color color) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_ || i == j) {
    throw Error(ErrorCode::VertexOutOfRange, "invalid pair " + pair_text(i, j), {i, j});
  }
  if (color < 1 || color > k_) {
    throw Error(ErrorCode::ColorOutOfRange,
                "color " + std::to_string(color) + " on " + pair_text(i, j) + " outside [1, " +
                    std::to_string(k_) + "]",
                {i, j});
  }
  cells_[static_cast<std::size_t>(i) * n_ + j] = static_cast<std::uint8_t>(color);
  cells_[static_cast<std::size_t>(j) * n_ + i] = static_cast<std::uint8_t>(color);
}

void ColoringBuilder::embed(const EdgeColoring& part, int offset) {
  for (int i = 0; i < part.n(); ++i)
    for (int j = i + 1; j < part.n(); ++j) set(offset + i, offset + j, part(i, j));
}

EdgeColoring ColoringBuilder::build() && {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (get(i, j) == 0)
        throw Error(ErrorCode::MissingEdge, "no color for pair " + pair_text(i, j), {i, j});
  return EdgeColoring(n_, k_, std::move(cells_));
}

EdgeColoring make_coloring(int n, int k, std::span<const ColoredEdge> entries) {
  ColoringBuilder builder(n, k);
  for (const auto& e : entries) {
    if (e.i < 0 || e.j >= n || e.i >= e.j) {
      throw Error(ErrorCode::VertexOutOfRange, "entry " + pair_text(e.i, e.j) +
                                                   " violates 0 <= i < j < " + std::to_string(n),
                  {e.i, e.j});
    }
    if (builder.get(e.i, e.j) != 0) {
      throw Error(ErrorCode::DuplicateEdge, "pair " + pair_text(e.i, e.j) + " listed twice",
                  {e.i, e.j});
    }
    builder.set(e.i, e.j, e.color);
  }
  return std::move(builder).build();
}

EdgeColoring join(const EdgeColoring& left, const EdgeColoring& right, Color bridge) {
  int k = std::max({left.k(), right.k(), bridge});
  if (bridge < 1) throw Error(ErrorCode::ColorOutOfRange, "bridge color must be >= 1");
  ColoringBuilder builder(left.n() + right.n(), k);
  builder.embed(left, 0);
  builder.embed(right, left.n());
  for (int i = 0; i < left.n(); ++i)
    for (int j = 0; j < right.n(); ++j) builder.set(i, left.n() + j, bridge);
  return std::move(builder).build();
}

EdgeColoring blowup(const EdgeColoring& base, std::span<const EdgeColoring> parts) {
  if (static_cast<int>(parts.size()) != base.n()) {
    throw Error(ErrorCode::ArityMismatch, "blow-up of a " + std::to_string(base.n()) +
                                              "-vertex base needs that many parts, got " +
                                              std::to_string(parts.size()));
  }
  int k = base.k();
  int total = 0;
  std::vector<int> offset;
  offset.reserve(parts.size());
  for (const auto& p : parts) {
    offset.push_back(total);
    total += p.n();
    k = std::max(k, p.k());
  }
  ColoringBuilder builder(total, k);
  for (int a = 0; a < base.n(); ++a) {
    builder.embed(parts[a], offset[a]);
    for (int b = a + 1; b < base.n(); ++b) {
      Color c = base(a, b);
      for (int x = 0; x < parts[a].n(); ++x)
        for (int y = 0; y < parts[b].n(); ++y) builder.set(offset[a] + x, offset[b] + y, c);
    }
  }
  return std::move(builder).build();
}

EdgeColoring relabel_colors(const EdgeColoring& c, const ColorRelabeling& r) {
  check_budget(r.new_k);
  auto image = [&](Color old) {
    auto it = r.map.find(old);
    return it == r.map.end() ? old : it->second;
  };
  std::map<Color, Color> seen;  // new -> old
  for (Color old : c.colors_used()) {
    Color nu = image(old);
    if (nu < 1 || nu > r.new_k) {
      throw Error(ErrorCode::TargetOutOfRange, "color " + std::to_string(old) + " maps to " +
                                                   std::to_string(nu) + ", outside [1, " +
                                                   std::to_string(r.new_k) + "]");
    }
    auto [it, inserted] = seen.emplace(nu, old);
    if (!inserted) {
      throw Error(ErrorCode::NonInjectiveMap, "colors " + std::to_string(it->second) + " and " +
                                                  std::to_string(old) + " both map to " +
                                                  std::to_string(nu));
    }
  }
  ColoringBuilder builder(c.n(), r.new_k);
  for (int i = 0; i < c.n(); ++i)
    for (int j = i + 1; j < c.n(); ++j) builder.set(i, j, image(c(i, j)));
  return std::move(builder).build();
}

std::string serialize(const EdgeColoring& c) {
  std::string out = "grc 1 " + std::to_string(c.n()) + " " + std::to_string(c.k()) + "\n";
  for (int i = 0; i + 1 < c.n(); ++i) {
    for (int j = i + 1; j < c.n(); ++j) {
      if (j > i + 1) out += ' ';
      out += std::to_string(c(i, j));
    }
    out += '\n';
  }
  return out;
}

namespace {

// Splits a line into tokens separated by exactly one space.
std::vector<int> parse_row(std::string_view line, int line_no) {
  std::vector<int> values;
  if (line.empty()) throw Error(ErrorCode::SyntaxError, "empty line " + std::to_string(line_no));
  std::size_t pos = 0;
  while (true) {
    std::size_t end = line.find(' ', pos);
    std::string_view token = line.substr(pos, end == std::string_view::npos ? end : end - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    bool leading_zero = token.size() > 1 && token.front() == '0';
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || leading_zero) {
      throw Error(ErrorCode::SyntaxError,
                  "bad token '" + std::string(token) + "' on line " + std::to_string(line_no));
    }
    values.push_back(value);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return values;
}

}  // namespace

EdgeColoring parse(std::string_view doc) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < doc.size()) {
    std::size_t end = doc.find('\n', pos);
    if (end == std::string_view::npos)
      throw Error(ErrorCode::SyntaxError, "document must end with a newline");
    lines.push_back(doc.substr(pos, end - pos));
    pos = end + 1;
  }
  if (lines.empty()) throw Error(ErrorCode::SyntaxError, "empty document");

  constexpr std::string_view magic = "grc ";
  if (lines[0].substr(0, magic.size()) != magic)
    throw Error(ErrorCode::SyntaxError, "missing 'grc' header");
  auto header = parse_row(lines[0].substr(magic.size()), 1);
  if (header.size() != 3 || header[0] != 1)
    throw Error(ErrorCode::SyntaxError, "header must be 'grc 1 <n> <k>'");
  int n = header[1];
  int k = header[2];
  if (n < 1 || k < 1 || k > kMaxColors)
    throw Error(ErrorCode::InconsistentHeader, "header declares n=" + std::to_string(n) +
                                                   ", k=" + std::to_string(k));
  if (static_cast<int>(lines.size()) != n)
    throw Error(ErrorCode::InconsistentHeader, "expected " + std::to_string(n - 1) +
                                                   " rows, found " +
                                                   std::to_string(lines.size() - 1));
  ColoringBuilder builder(n, k);
  for (int i = 0; i + 1 < n; ++i) {
    auto row = parse_row(lines[i + 1], i + 2);
    if (static_cast<int>(row.size()) != n - 1 - i)
      throw Error(ErrorCode::InconsistentHeader, "row " + std::to_string(i + 1) + " has " +
                                                     std::to_string(row.size()) + " entries");
    for (int j = i + 1; j < n; ++j) {
      Color c = row[j - i - 1];
      if (c < 1 || c > k)
        throw Error(ErrorCode::InconsistentHeader,
                    "color " + std::to_string(c) + " outside declared budget " + std::to_string(k),
                    {i, j});
      builder.set(i, j, c);
    }
  }
  return std::move(builder).build();
}

}  // namespace gr
