// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "gr/constructions.hpp"
#include "gr/detection.hpp"
#include "gr/error.hpp"
#include "gr/formulas.hpp"
#include "gr/parallel.hpp"
#include "gr/partition.hpp"
#include "gr/search.hpp"
#include "oracles.hpp"

using namespace gr;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) note << "failed: " << what << "; ";
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int number, const char* title, double limit_seconds, const std::function<void(Check&)>& body) {
  Check check;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.expect(false, std::string("exception: ") + e.what());
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed > limit_seconds) {
    std::ostringstream limit;
    limit << "time " << elapsed << "s over " << limit_seconds << "s";
    check.expect(false, limit.str());
  }
  if (!check.ok) ++failures;
  std::printf("criterion %d %-28s %s  %.3fs  %s\n", number, title, check.ok ? "PASS" : "FAIL",
              elapsed, check.note.str().c_str());
  std::fflush(stdout);
}

void catalog_validity(Check& c) {
  const auto ids = catalog_ids();
  c.expect(ids.size() == 12, "twelve patterns");
  for (PatternId id : ids) {
    Pattern p = resolve(id);
    c.expect(p.m == 5, id.to_string() + " has 5 vertices");
    c.expect(chromatic_number(p) == 3, id.to_string() + " has chromatic number 3");
  }
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      c.expect(!are_isomorphic(resolve(ids[i]), resolve(ids[j])),
               ids[i].to_string() + " vs " + ids[j].to_string());
  c.expect(are_isomorphic(resolve(PatternId::h(12)), resolve(PatternId::kipas(4))), "h12 ~ kipas(4)");
  c.expect(are_isomorphic(resolve(PatternId::kipas(2)), resolve(PatternId::complete(3))), "kipas(2) ~ K3");
}

void ramsey_anchor(Check& c, std::vector<std::optional<PatternId>> rules, int r) {
  SearchProblem below{r - 1, rules, false, SearchMode::FirstWitness};
  SearchOutcome w = exhaustive_check(below);
  c.expect(w.witness.has_value(), "witness at n=" + std::to_string(r - 1));
  if (w.witness) {
    AvoidanceSpec spec;
    for (std::size_t i = 0; i < rules.size(); ++i) spec.per_color.emplace(i + 1, *rules[i]);
    c.expect(verify(*w.witness, spec).passed, "witness verifies");
  }
  SearchProblem at{r, rules, false, SearchMode::ProveExhausted};
  SearchOutcome e = exhaustive_check(at);
  c.expect(e.kind == SearchOutcome::Kind::Exhausted && e.witness_count == 0,
           "exhausted at n=" + std::to_string(r));
  c.note << "n=" << r << " nodes=" << e.nodes_explored
         << (e.symmetry_reduced ? " (first edge pinned)" : "") << "; ";
}

void construction_sizes(Check& c) {
  auto lower = [&](PatternId id, int k, int expected) {
    EdgeColoring g = build_lower(id, k);
    c.expect(g.n() == expected, id.to_string() + " k=" + std::to_string(k) + " size " +
                                    std::to_string(g.n()) + " != " + std::to_string(expected));
    c.expect(verify(g, lower_bound_spec(id, k)).passed, id.to_string() + " verifies");
  };
  auto mixed = [&](int k, int s, int expected) {
    EdgeColoring g = build_mixed(k, s);
    c.expect(g.n() == expected, "mixed size");
    c.expect(verify(g, mixed_spec(k, s)).passed, "mixed verifies");
  };
  lower(PatternId::h(10), 3, 10);
  lower(PatternId::h(10), 4, 25);
  lower(PatternId::h(10), 5, 50);
  lower(PatternId::h(1), 3, 20);
  lower(PatternId::h(1), 4, 40);
  lower(PatternId::h(5), 3, 20);
  lower(PatternId::h(5), 4, 45);
  lower(PatternId::h(11), 3, 20);
  lower(PatternId::h(11), 4, 45);
  lower(PatternId::kipas(3), 2, 9);
  lower(PatternId::kipas(3), 3, 18);
  lower(PatternId::kipas(3), 4, 45);
  const int kipas4[] = {9, 20, 49, 100};
  for (int k = 2; k <= 5; ++k) {
    lower(PatternId::kipas(4), k, kipas4[k - 2]);
    mixed(k, k, kipas4[k - 2]);
  }
  mixed(3, 1, 4);
  mixed(3, 2, 10);
  mixed(4, 3, 20);
  mixed(5, 4, 50);
  mixed(5, 3, 20);
}

void formula_regression(Check& c) {
  const auto& table = RamseyTable::standard();
  for (const auto& [id, r2] : table.entries())
    c.expect(gr_value(id, 2).value == r2, "GR_2(" + id.to_string() + ") = R2");
  for (int m = 2; m <= 4; ++m)
    for (int k = 1; k <= 10; ++k)
      c.expect(conjecture_kipas(m, k).value == gr_value(PatternId::kipas(m), k).value,
               "conjecture m=" + std::to_string(m) + " k=" + std::to_string(k));
  c.expect(case3_recurrence_check(4, 20), "case-3 recurrence to 20");
  for (PatternId id : {PatternId::h(1), PatternId::h(2), PatternId::h(3), PatternId::h(4),
                       PatternId::h(5), PatternId::h(6), PatternId::h(10), PatternId::h(11)})
    for (int k = 3; k <= 40; ++k)
      c.expect(check_inequalities_star(id, k), "(*) " + id.to_string() + " k=" + std::to_string(k));
  for (int k = 3; k <= 40; ++k)
    for (int s = 1; s <= k; ++s)
      c.expect(check_inequalities_star2(k, s), "mixed inequalities k=" + std::to_string(k));
}

void detection_oracle(Check& c) {
  oracle::Rng rng(20260101);
  const auto ids = catalog_ids();
  int agreements = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 8);
    const int k = 1 + static_cast<int>(rng() % 4);
    EdgeColoring g = oracle::random_coloring(rng, n, k);
    for (PatternId id : ids) {
      Pattern p = resolve(id);
      for (Color color = 1; color <= k; ++color) {
        auto e = find_mono_embedding(g, p, color);
        const bool expected = oracle::has_mono_copy(g, p, color);
        c.expect(e.has_value() == expected, "presence differs");
        if (e) c.expect(oracle::embedding_is_valid(g, p, e->map, color), "embedding invalid");
        agreements += e.has_value() == expected;
      }
    }
  }
  c.note << agreements << " pattern/color checks agree; ";
}

void decomposition(Check& c) {
  oracle::Rng rng(424242);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 59);
    const int k = 1 + static_cast<int>(rng() % 6);
    EdgeColoring g = oracle::random_gallai(rng, n, k);
    GallaiPartition p = gallai_partition(g);
    c.expect(oracle::parts_valid(g, p.parts), "partition valid");
  }
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 40);
    const int k = 3 + static_cast<int>(rng() % 4);
    EdgeColoring base = oracle::random_gallai(rng, n, k);
    gr::ColoringBuilder b(n, k);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) b.set(i, j, base(i, j));
    // plant a rainbow triangle on three random vertices
    std::vector<int> v{static_cast<int>(rng() % n), 0, 0};
    do v[1] = static_cast<int>(rng() % n); while (v[1] == v[0]);
    do v[2] = static_cast<int>(rng() % n); while (v[2] == v[0] || v[2] == v[1]);
    b.set(v[0], v[1], 1);
    b.set(v[0], v[2], 2);
    b.set(v[1], v[2], 3);
    EdgeColoring planted = std::move(b).build();
    try {
      gallai_partition(planted);
      c.expect(false, "planted rainbow accepted");
    } catch (const Error& e) {
      c.expect(e.code() == ErrorCode::RainbowTriangle, "raises RainbowTriangle");
      const auto& w = e.detail();
      c.expect(w.size() == 3 && oracle::is_rainbow(planted, w[0], w[1], w[2]), "witness is rainbow");
    }
  }
}

void cnf_round_trip(Check& c) {
  // clause counts from closed forms
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k <= 3; ++k)
      for (bool gallai : {false, true})
        for (PatternId id : {PatternId::complete(3), PatternId::path(3), PatternId::h(10),
                             PatternId::kipas(4), PatternId::cycle(4)}) {
          SearchProblem p{n, std::vector<std::optional<PatternId>>(k, id), gallai,
                          SearchMode::FirstWitness};
          CnfDocument doc = encode_cnf(p);
          const std::uint64_t edges = n * (n - 1) / 2;
          const std::uint64_t rainbow =
              gallai && k >= 3 ? oracle::binomial(n, 3) * k * (k - 1) * (k - 2) : 0;
          const std::uint64_t pattern = k * oracle::labelled_copies(n, resolve(id));
          c.expect(doc.alo_clauses == edges, "ALO count");
          c.expect(doc.amo_clauses == edges * k * (k - 1) / 2, "AMO count");
          c.expect(doc.rainbow_clauses == rainbow, "rainbow count");
          c.expect(doc.pattern_clauses == pattern, "pattern count " + id.to_string());
          c.expect(doc.clauses.size() == edges + doc.amo_clauses + rainbow + pattern, "total");
        }
  // random consistent assignments
  oracle::Rng rng(31337);
  int satisfied = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const int k = 1 + static_cast<int>(rng() % 3);
    SearchProblem p{n, {}, rng() % 2 == 0, SearchMode::FirstWitness};
    const PatternId choices[] = {PatternId::complete(3), PatternId::path(3), PatternId::h(10),
                                 PatternId::star(2), PatternId::cycle(4)};
    AvoidanceSpec spec;
    spec.require_gallai = p.require_gallai;
    for (int col = 1; col <= k; ++col) {
      const PatternId id = choices[rng() % 5];
      p.per_color.push_back(id);
      spec.per_color.emplace(col, id);
    }
    CnfDocument doc = encode_cnf(p);
    EdgeColoring g = oracle::random_coloring(rng, n, k);
    std::vector<int> model;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (Color col = 1; col <= k; ++col) {
          const int var = cnf_variable(n, k, i, j, col);
          model.push_back(g(i, j) == col ? var : -var);
        }
    c.expect(decode_assignment(doc, model, n, k) == g, "decode returns the coloring");
    const bool sat = satisfies(doc, model);
    c.expect(sat == verify(g, spec).passed, "CNF agrees with verify");
    satisfied += sat;
  }
  c.note << satisfied << "/1000 assignments satisfy; ";
}

}  // namespace

int main() {
  set_thread_count(1);
  criterion(1, "catalog validity", 1.0, catalog_validity);
  criterion(2, "R2(h10) = 7", 60.0,
            [](Check& c) { ramsey_anchor(c, {PatternId::h(10), PatternId::h(10)}, 7); });
  criterion(3, "R(P3, kipas(4)) = 5", 1.0,
            [](Check& c) { ramsey_anchor(c, {PatternId::path(3), PatternId::kipas(4)}, 5); });
  set_thread_count(0);
  criterion(4, "construction certification", 300.0, construction_sizes);
  set_thread_count(1);
  criterion(5, "formula regression", 1.0, formula_regression);
  criterion(6, "detection oracle", 120.0, detection_oracle);
  criterion(7, "Gallai decomposition", 60.0, decomposition);
  criterion(8, "CNF round trip", 30.0, cnf_round_trip);
  std::printf("criterion 9 (external SAT solver certification) is a documented manual workflow\n");
  return failures;
}
