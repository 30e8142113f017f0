#include "gr/detection.hpp"

#include <algorithm>
#include <set>

#include "gr/error.hpp"
#include "matcher.hpp"
#include "parallel_for.hpp"

namespace gr {

AvoidanceSpec AvoidanceSpec::forbid_all(PatternId id, int k, bool require_gallai) {
  AvoidanceSpec spec;
  for (Color c = 1; c <= k; ++c) spec.per_color.emplace(c, id);
  spec.require_gallai = require_gallai;
  return spec;
}

namespace {

std::optional<Triple> rainbow_scan(const EdgeColoring& c, std::uint64_t& examined) {
  const int n = c.n();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      const Color a = c(x, y);
      for (int z = y + 1; z < n; ++z) {
        ++examined;
        const Color b = c(x, z);
        if (b == a) continue;
        const Color d = c(y, z);
        if (d != a && d != b) return Triple{x, y, z};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Triple> find_rainbow_triangle(const EdgeColoring& c) {
  std::uint64_t examined = 0;
  return rainbow_scan(c, examined);
}

std::optional<Embedding> find_mono_embedding(const EdgeColoring& c, const Pattern& p, Color color) {
  detail::Matcher matcher(p);
  auto host = detail::BitRows::color_class(c, color);
  std::vector<int> map;
  std::uint64_t nodes = 0;
  if (!matcher.find(host, map, nodes)) return std::nullopt;
  return Embedding{std::move(map), color};
}

std::uint64_t count_mono_copies(const EdgeColoring& c, const Pattern& p, Color color) {
  detail::Matcher matcher(p);
  auto host = detail::BitRows::color_class(c, color);
  std::set<std::vector<std::pair<int, int>>> images;
  matcher.for_each(host, [&](const std::vector<int>& map) {
    std::vector<std::pair<int, int>> image;
    image.reserve(p.edges.size());
    for (auto [a, b] : p.edges) image.emplace_back(std::minmax(map[a], map[b]));
    std::sort(image.begin(), image.end());
    images.insert(std::move(image));
    return true;
  });
  return images.size();
}

VerificationReport verify(const EdgeColoring& c, const AvoidanceSpec& spec) {
  for (const auto& [color, id] : spec.per_color) {
    if (color < 1 || color > c.k())
      throw Error(ErrorCode::ColorOutOfRange, "spec forbids " + id.to_string() + " in color " +
                                                  std::to_string(color) + " but k = " +
                                                  std::to_string(c.k()));
  }
  VerificationReport report;
  if (spec.require_gallai) report.rainbow_witness = rainbow_scan(c, report.stats.triangles_examined);

  std::vector<std::pair<Color, PatternId>> jobs(spec.per_color.begin(), spec.per_color.end());
  std::vector<std::optional<Embedding>> found(jobs.size());
  std::vector<std::uint64_t> nodes(jobs.size(), 0);
  detail::parallel_for(static_cast<int>(jobs.size()), [&](int i) {
    auto [color, id] = jobs[i];
    detail::Matcher matcher(resolve(id));
    auto host = detail::BitRows::color_class(c, color);
    std::vector<int> map;
    if (matcher.find(host, map, nodes[i])) found[i] = Embedding{std::move(map), color};
  });
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    report.stats.search_nodes += nodes[i];
    ++report.stats.colors_checked;
    if (found[i]) report.mono_witnesses.push_back({jobs[i].second, std::move(*found[i])});
  }
  report.passed = !report.rainbow_witness && report.mono_witnesses.empty();
  return report;
}

}  // namespace gr
