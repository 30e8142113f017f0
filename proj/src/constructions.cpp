#include "gr/constructions.hpp"

#include <array>
#include <string>

#include "gr/error.hpp"
#include "gr/fixtures.hpp"
#include "gr/formulas.hpp"

namespace gr {

namespace {

bool in_family_f(PatternId id) {
  return id.family == PatternFamily::Catalog &&
         ((id.param >= 1 && id.param <= 6) || id.param == 10 || id.param == 11);
}

// Parameters that drive the recursion: order and R2 of the pattern the
// construction actually avoids, its 2-color seed, and (for even kipas) the
// m used by the pentagon assembly at even k.
struct EffectiveBase {
  int h_order = 0;
  int r2 = 0;
  int case3_m = 0;
  PatternId two_color_target;
  std::optional<int> supplied_r2;
};

EdgeColoring five_copies_under(const EdgeColoring& base, const EdgeColoring& part) {
  std::array<EdgeColoring, 5> parts{part, part, part, part, part};
  return blowup(base, parts);
}

EdgeColoring aux_unchecked(int m, int k, Color top) {
  if (k == 4) {
    return five_copies_under(base_pentagon(1, 2), EdgeColoring::monochromatic(m / 2, top));
  }
  return five_copies_under(base_pentagon(k - 3, k - 2), aux_unchecked(m, k - 2, top));
}

EdgeColoring recursive_lower(const EffectiveBase& base, int k);

EdgeColoring case3_unchecked(const EffectiveBase& base, int k) {
  const int m = base.case3_m;
  EdgeColoring outer = aux_unchecked(m, k, k);      // top color k
  EdgeColoring inner = aux_unchecked(m, k, k - 1);  // top color k-1
  std::array<EdgeColoring, 5> parts{outer, inner, inner, outer, recursive_lower(base, k - 2)};
  return blowup(base_pentagon(k, k - 1), parts).with_k(k);
}

EdgeColoring recursive_lower(const EffectiveBase& base, int k) {
  if (k == 1) return EdgeColoring::monochromatic(base.h_order - 1, 1);
  if (k == 2) return extremal_two_coloring(base.two_color_target, base.supplied_r2);
  if (k % 2 == 0) {
    if (base.case3_m > 0) return case3_unchecked(base, k);
    return five_copies_under(base_pentagon(k - 1, k), recursive_lower(base, k - 2));
  }
  if (2 * (base.r2 - 1) >= 5 * (base.h_order - 1)) {
    EdgeColoring half = recursive_lower(base, k - 1);
    return join(half, half, k);
  }
  return five_copies_under(base_pentagon(k - 1, k), recursive_lower(base, k - 2));
}

EffectiveBase effective_base(PatternId target, int k, std::optional<int> r2) {
  EffectiveBase base;
  base.two_color_target = target;
  if (target == PatternId::h(10)) {
    base.h_order = 5;
    base.r2 = 7;
    if (k >= 3) {
      // Every K3-free coloring avoids h10; recurse on the triangle's data.
      base = EffectiveBase{3, 6, 0, PatternId::kipas(2), std::nullopt};
    }
    return base;
  }
  if (in_family_f(target)) {
    base.h_order = 5;
    base.r2 = *RamseyTable::standard().r2(target);
    return base;
  }
  if (target.family == PatternFamily::Kipas) {
    const int m = target.param;
    auto known = RamseyTable::standard().r2(target);
    if (!known && !r2)
      throw Error(ErrorCode::UnsupportedKipas,
                  "kipas(" + std::to_string(m) + ") needs a supplied R2 value");
    base.h_order = m + 1;
    base.r2 = known ? *known : *r2;
    base.supplied_r2 = known ? std::nullopt : r2;
    base.case3_m = m % 2 == 0 ? m : 0;
    return base;
  }
  throw Error(ErrorCode::UnsupportedTarget, "no construction for " + target.to_string());
}

void certify(const EdgeColoring& c, const AvoidanceSpec& spec, const std::string& what) {
  VerificationReport report = verify(c, spec);
  if (!report.passed) {
    std::string why = report.rainbow_witness ? "rainbow triangle"
                                             : "monochromatic " +
                                                   report.mono_witnesses.front().pattern.to_string() +
                                                   " in color " +
                                                   std::to_string(report.mono_witnesses.front()
                                                                      .embedding.color);
    throw Error(ErrorCode::CertificationFailed, what + " failed verification: " + why);
  }
}

void check_size(const EdgeColoring& c, Count expected, const std::string& what) {
  if (c.n() != expected)
    throw Error(ErrorCode::CertificationFailed, what + " has " + std::to_string(c.n()) +
                                                    " vertices, expected " +
                                                    std::to_string(expected));
}

// Disjoint cliques K_{size} in `color`: every component of the color class
// is complete and has exactly `size` vertices.
bool is_clique_union(const EdgeColoring& c, Color color, int size) {
  const int n = c.n();
  std::vector<int> comp(n, -1);
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = s;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (int w = 0; w < n; ++w)
        if (w != members[i] && comp[w] < 0 && c(members[i], w) == color) {
          comp[w] = s;
          members.push_back(w);
        }
    if (static_cast<int>(members.size()) != size) return false;
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        if (c(members[a], members[b]) != color) return false;
  }
  return true;
}

EdgeColoring mixed_unchecked(int k, int s) {
  if (s == k) {
    return recursive_lower(effective_base(PatternId::kipas(4), k, std::nullopt), k).with_k(k);
  }
  EdgeColoring edge = EdgeColoring::monochromatic(2, k);
  if (s == 0) return edge;
  if (s == 1) return join(edge, edge, 1);
  // Colors s-1 and s are reserved for the pentagon; the (k-2)-color
  // sub-construction is shifted around them.
  ColorRelabeling shift;
  shift.new_k = k;
  for (Color c = s - 1; c <= k - 2; ++c) shift.map[c] = c + 2;
  EdgeColoring part = relabel_colors(mixed_unchecked(k - 2, s - 2), shift);
  return five_copies_under(base_pentagon(s - 1, s), part).with_k(k);
}

}  // namespace

EdgeColoring base_pentagon(Color cycle, Color chord) {
  if (cycle == chord) throw Error(ErrorCode::EqualColors, "pentagon needs two distinct colors");
  if (cycle < 1 || chord < 1) throw Error(ErrorCode::ColorOutOfRange, "colors start at 1");
  ColoringBuilder builder(5, std::max(cycle, chord));
  for (int i = 0; i < 5; ++i) {
    builder.set(i, (i + 1) % 5, cycle);
    builder.set(i, (i + 2) % 5, chord);
  }
  return std::move(builder).build();
}

EdgeColoring rook_graph_coloring() {
  ColoringBuilder builder(9, 2);
  for (int u = 0; u < 9; ++u)
    for (int v = u + 1; v < 9; ++v) {
      const bool same_line = u / 3 == v / 3 || u % 3 == v % 3;
      builder.set(u, v, same_line ? 1 : 2);
    }
  return std::move(builder).build();
}

EdgeColoring split_k4_coloring() {
  ColoringBuilder builder(6, 2);
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) builder.set(u, v, v < 4 ? 1 : 2);
  return std::move(builder).build();
}

EdgeColoring extremal_two_coloring(PatternId target, std::optional<int> r2) {
  const PatternId t = formula_target(target);
  std::optional<int> known = RamseyTable::standard().r2(t);
  if (!known && !r2)
    throw Error(t.family == PatternFamily::Kipas ? ErrorCode::UnsupportedKipas
                                                 : ErrorCode::UnsupportedTarget,
                "no Ramsey number available for " + target.to_string());
  const int n = known ? *known - 1 : *r2 - 1;

  std::optional<EdgeColoring> result;
  if (t == PatternId::h(10)) {
    result = split_k4_coloring();
  } else if (t == PatternId::kipas(2)) {
    result = base_pentagon(1, 2);
  } else if (t == PatternId::kipas(4)) {
    result = rook_graph_coloring();
  } else if (known) {
    result = embedded_fixture(t);
  }
  if (!result) result = search_extremal(t, n);

  check_size(*result, n, "extremal coloring for " + target.to_string());
  certify(*result, AvoidanceSpec::forbid_all(target, 2, false),
          "extremal coloring for " + target.to_string());
  return *result;
}

AvoidanceSpec lower_bound_spec(PatternId target, int k) {
  return AvoidanceSpec::forbid_all(target, k, true);
}

AvoidanceSpec mixed_spec(int k, int s) {
  AvoidanceSpec spec;
  spec.require_gallai = true;
  for (Color c = 1; c <= k; ++c)
    spec.per_color.emplace(c, c <= s ? PatternId::kipas(4) : PatternId::path(3));
  return spec;
}

EdgeColoring build_lower(PatternId target, int k, std::optional<int> r2) {
  if (k < 1) throw Error(ErrorCode::RangeViolation, "k must be >= 1");
  const PatternId t = formula_target(target);
  EffectiveBase base = effective_base(t, k, r2);
  EdgeColoring result = recursive_lower(base, k).with_k(k);
  const std::string what = "construction for " + target.to_string() + " at k=" + std::to_string(k);
  check_size(result, g_value(t, k, r2), what);
  certify(result, lower_bound_spec(target, k), what);
  return result;
}

EdgeColoring build_kipas_aux(int m, int k, Color top_color) {
  if (m < 2 || m % 2 != 0 || k < 4 || k % 2 != 0)
    throw Error(ErrorCode::ParityViolation, "auxiliary tower needs even m >= 2 and even k >= 4");
  if (top_color != k - 1 && top_color != k)
    throw Error(ErrorCode::RangeViolation, "top color must be k-1 or k");
  EdgeColoring result = aux_unchecked(m, k, top_color).with_k(k);
  const std::string what = "auxiliary tower (m=" + std::to_string(m) + ", k=" + std::to_string(k) + ")";
  check_size(result, (m / 2) * pow5((k - 2) / 2), what);
  AvoidanceSpec spec;
  spec.require_gallai = true;
  for (Color c = 1; c <= k; ++c)
    if (c != top_color) spec.per_color.emplace(c, PatternId::kipas(m));
  certify(result, spec, what);
  if (!is_clique_union(result, top_color, m / 2))
    throw Error(ErrorCode::CertificationFailed, what + ": top color is not a union of K_m/2");
  return result;
}

EdgeColoring assemble_case3(int m, int k, std::optional<int> r2) {
  if (m < 2 || m % 2 != 0 || k < 4 || k % 2 != 0)
    throw Error(ErrorCode::ParityViolation, "pentagon assembly needs even m >= 2 and even k >= 4");
  const PatternId target = PatternId::kipas(m);
  EffectiveBase base = effective_base(target, k, r2);
  EdgeColoring result = case3_unchecked(base, k);
  const std::string what = "kipas(" + std::to_string(m) + ") assembly at k=" + std::to_string(k);
  check_size(result, g_value(target, k, r2), what);
  certify(result, lower_bound_spec(target, k), what);
  return result;
}

EdgeColoring build_mixed(int k, int s) {
  if (k < 1 || s < 0 || s > k) throw Error(ErrorCode::RangeViolation, "need k >= 1 and 0 <= s <= k");
  EdgeColoring result = mixed_unchecked(k, s).with_k(k);
  const std::string what = "mixed construction (k=" + std::to_string(k) + ", s=" + std::to_string(s) + ")";
  check_size(result, w_value(k, s), what);
  certify(result, mixed_spec(k, s), what);
  return result;
}

}  // namespace gr
