#pragma once

#include <optional>

#include "gr/coloring.hpp"
#include "gr/detection.hpp"
#include "gr/pattern.hpp"

namespace gr {

/// K5 with the 5-cycle (i, i+1 mod 5) in `cycle` and the five chords in
/// `chord`; neither color contains a triangle. EqualColors when they match.
EdgeColoring base_pentagon(Color cycle, Color chord);

/// 2-coloring of K_{R2-1} with no monochromatic `target` in either color.
/// h10, kipas(2) and kipas(4) use closed-form colorings; the other table
/// entries come from the embedded search fixtures. For kipas(m) outside the
/// table, `r2` must be supplied and the coloring is searched for on the fly.
EdgeColoring extremal_two_coloring(PatternId target, std::optional<int> r2 = std::nullopt);

/// Recursive lower-bound coloring on g_value(target, k) vertices with no
/// monochromatic `target` and no rainbow triangle. Certified before return
/// (CertificationFailed otherwise). Targets: h1..h6, h10, h11, h12 and
/// kipas(m) for m in {2, 3, 4} (other m need `r2`).
EdgeColoring build_lower(PatternId target, int k, std::optional<int> r2 = std::nullopt);

/// Auxiliary tower on (m/2) 5^((k-2)/2) vertices using colors [k-2] plus
/// `top_color` in {k-1, k}; the top color forms disjoint cliques K_{m/2} and
/// no other color contains kipas(m). ParityViolation unless m, k are even,
/// m >= 2, k >= 4.
EdgeColoring build_kipas_aux(int m, int k, Color top_color);

/// Lower-bound coloring for kipas(m), even m, even k >= 4: a pentagon with
/// the cycle in color k and the chords in k-1, blown up with parts, in cycle
/// order, aux(top k), aux(top k-1), aux(top k-1), aux(top k), and
/// build_lower(kipas(m), k-2).
EdgeColoring assemble_case3(int m, int k, std::optional<int> r2 = std::nullopt);

/// Mixed coloring on w_value(k, s) vertices: no monochromatic kipas(4) in
/// colors 1..s, no monochromatic P3 in colors s+1..k, no rainbow triangle.
/// RangeViolation unless 0 <= s <= k.
EdgeColoring build_mixed(int k, int s);

/// The avoidance rules each builder certifies against.
AvoidanceSpec lower_bound_spec(PatternId target, int k);
AvoidanceSpec mixed_spec(int k, int s);

/// K_9 with color 1 on the 3x3 rook's graph (the self-complementary
/// strongly regular graph with parameters (9, 4, 1, 2)), color 2 elsewhere.
EdgeColoring rook_graph_coloring();

/// K_6 with color 1 on a K4 over {0, 1, 2, 3}, color 2 elsewhere.
EdgeColoring split_k4_coloring();

}  // namespace gr
