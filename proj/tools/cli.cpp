#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include "gr/coloring.hpp"
#include "gr/constructions.hpp"
#include "gr/detection.hpp"
#include "gr/error.hpp"
#include "gr/fixtures.hpp"
#include "gr/formulas.hpp"
#include "gr/parallel.hpp"
#include "gr/partition.hpp"
#include "gr/pattern.hpp"
#include "gr/search.hpp"

namespace gr::cli {

namespace {

using nlohmann::json;

// Bad flag values surface as usage errors (exit 2), not library failures.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

PatternId pattern_flag(const std::string& flag, const std::string& text) {
  try {
    return PatternId::parse(text);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw UsageError("cannot write " + path);
}

EdgeColoring load_coloring(const std::string& path) { return parse(read_file(path)); }

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

struct Printer {
  std::ostream& out;
  bool json_mode;

  // Compact JSON with --json; otherwise `key: value` lines.
  void summary(const json& j) const {
    if (json_mode) {
      out << j.dump() << '\n';
      return;
    }
    for (const auto& [key, value] : j.items()) out << key << ": " << scalar_text(value) << '\n';
  }

  // Reports with nested structure read better as indented JSON.
  void report(const json& j) const { out << (json_mode ? j.dump() : j.dump(2)) << '\n'; }
};

json triple_json(const std::optional<Triple>& t) {
  if (!t) return nullptr;
  return json::array({(*t)[0], (*t)[1], (*t)[2]});
}

json report_json(const VerificationReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.mono_witnesses)
    witnesses.push_back({{"color", w.embedding.color},
                         {"pattern", w.pattern.to_string()},
                         {"map", w.embedding.map}});
  return {{"passed", r.passed},
          {"rainbow_witness", triple_json(r.rainbow_witness)},
          {"mono_witnesses", witnesses},
          {"stats",
           {{"triangles_examined", r.stats.triangles_examined},
            {"colors_checked", r.stats.colors_checked},
            {"search_nodes", r.stats.search_nodes}}}};
}

std::vector<std::optional<PatternId>> per_color_flag(const std::string& text) {
  std::vector<std::optional<PatternId>> result;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "-" || item == "none")
      result.emplace_back(std::nullopt);
    else
      result.emplace_back(pattern_flag("--per-color", item));
  }
  if (result.empty()) throw UsageError("--per-color: needs at least one color");
  return result;
}

bool claims_unsat(const std::string& model) {
  std::istringstream in(model);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("s UNSATISFIABLE", 0) == 0 || line.rfind("UNSAT", 0) == 0) return true;
  }
  return false;
}

int emit_built(const Printer& print, const EdgeColoring& c, const std::string& out_path,
               json summary) {
  summary["size"] = c.n();
  summary["colors_used"] = c.colors_used();
  summary["certified"] = true;
  if (!out_path.empty()) {
    write_file(out_path, serialize(c));
    summary["out"] = out_path;
    print.summary(summary);
  } else if (print.json_mode) {
    summary["grc"] = serialize(c);
    print.summary(summary);
  } else {
    print.summary(summary);
    print.out << serialize(c);
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gallai colorings: constructions, verification and Ramsey formulas", "gallai"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  bool json_mode = false;
  int threads = 1;
  app.add_flag("--json", json_mode, "Machine-readable JSON output");
  app.add_option("--threads", threads, "Worker threads (0 = hardware concurrency)")
      ->check(CLI::NonNegativeNumber);

  // build
  std::string target_text, out_path;
  int k = 0, s = -1;
  std::optional<int> r2;
  auto* build = app.add_subcommand("build", "Build a certified lower-bound coloring");
  build->add_option("--target", target_text, "Pattern id")->required();
  build->add_option("--k", k, "Number of colors")->required();
  build->add_option("--r2", r2, "R2 value for kipas(m) outside the table");
  build->add_option("--out", out_path, "Output GRC file");

  auto* build_mixed_cmd = app.add_subcommand("build-mixed", "Build the mixed P3/kipas(4) coloring");
  build_mixed_cmd->add_option("--k", k, "Number of colors")->required();
  build_mixed_cmd->add_option("--s", s, "Colors avoiding kipas(4)")->required();
  build_mixed_cmd->add_option("--out", out_path, "Output GRC file");

  // verify
  std::string input;
  bool gallai = false;
  std::vector<std::string> forbid, forbid_all;
  auto* verify_cmd = app.add_subcommand("verify", "Check a GRC coloring against avoidance rules");
  verify_cmd->add_option("file", input, "GRC file")->required();
  verify_cmd->add_flag("--gallai", gallai, "Forbid rainbow triangles");
  verify_cmd->add_option("--forbid", forbid, "color=pattern, repeatable")->take_all();
  verify_cmd->add_option("--forbid-all", forbid_all, "Pattern forbidden in every color");

  auto* partition_cmd = app.add_subcommand("partition", "Gallai partition of a GRC coloring");
  partition_cmd->add_option("file", input, "GRC file")->required();

  // formula
  bool conjecture = false;
  auto* formula_cmd = app.add_subcommand("formula", "Evaluate a Gallai-Ramsey formula");
  formula_cmd->add_option("--target", target_text, "Pattern id")->required();
  formula_cmd->add_option("--k", k, "Number of colors")->required();
  formula_cmd->add_option("--s", s, "Colors avoiding kipas(4); the rest avoid P3");
  formula_cmd->add_flag("--conjecture", conjecture, "Conjectured value for kipas(m)");
  formula_cmd->add_option("--r2", r2, "R2 value for kipas(m) outside the table");

  // search / encode / decode
  int n = 0;
  std::string per_color, mode = "first";
  auto* search_cmd = app.add_subcommand("search", "Exhaustive search for an avoiding coloring");
  search_cmd->add_option("--n", n, "Number of vertices")->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--per-color", per_color, "Pattern per color, comma separated")
      ->required();
  search_cmd->add_flag("--gallai", gallai, "Forbid rainbow triangles");
  search_cmd->add_option("--mode", mode, "first or exhaust")
      ->check(CLI::IsMember({"first", "exhaust"}));

  auto* encode_cmd = app.add_subcommand("encode", "Write a DIMACS CNF for a search problem");
  encode_cmd->add_option("--n", n, "Number of vertices")->required()->check(CLI::PositiveNumber);
  encode_cmd->add_option("--k", k, "Number of colors")->required()->check(CLI::PositiveNumber);
  encode_cmd->add_option("--per-color", per_color, "Pattern per color, comma separated")
      ->required();
  encode_cmd->add_flag("--gallai", gallai, "Forbid rainbow triangles");
  encode_cmd->add_option("--out", out_path, "Output CNF file")->required();

  std::string cnf_path, model_path;
  auto* decode_cmd = app.add_subcommand("decode", "Turn a solver model into a GRC coloring");
  decode_cmd->add_option("--cnf", cnf_path, "CNF written by encode")->required();
  decode_cmd->add_option("--model", model_path, "Solver output")->required();
  decode_cmd->add_option("--n", n, "Number of vertices")->required();
  decode_cmd->add_option("--k", k, "Number of colors")->required();
  decode_cmd->add_option("--out", out_path, "Output GRC file");

  auto* catalog_cmd = app.add_subcommand("catalog", "List the pattern catalog");

  auto* fixtures_cmd = app.add_subcommand("fixtures", "Manage extremal 2-coloring fixtures");
  fixtures_cmd->require_subcommand(1, 1);
  std::string fixture_dir;
  auto* regenerate_cmd = fixtures_cmd->add_subcommand("regenerate", "Re-run extremal searches");
  regenerate_cmd->add_option("--dir", fixture_dir, "Output directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  set_thread_count(threads);
  const Printer print{out, json_mode};

  try {
    if (build->parsed()) {
      const PatternId target = pattern_flag("--target", target_text);
      if (k < 1) throw UsageError("--k: must be >= 1");
      EdgeColoring c = build_lower(target, k, r2);
      return emit_built(print, c, out_path, {{"target", target.to_string()}, {"k", k}});
    }

    if (build_mixed_cmd->parsed()) {
      if (k < 1 || s < 0 || s > k) throw UsageError("--s: must satisfy 0 <= s <= k");
      EdgeColoring c = build_mixed(k, s);
      return emit_built(print, c, out_path, {{"k", k}, {"s", s}});
    }

    if (verify_cmd->parsed()) {
      EdgeColoring c = load_coloring(input);
      AvoidanceSpec spec;
      spec.require_gallai = gallai;
      for (const auto& text : forbid_all) {
        const PatternId id = pattern_flag("--forbid-all", text);
        for (Color color = 1; color <= c.k(); ++color) spec.per_color[color] = id;
      }
      for (const auto& rule : forbid) {
        const auto eq = rule.find('=');
        if (eq == std::string::npos) throw UsageError("--forbid: expected color=pattern");
        int color = 0;
        try {
          color = std::stoi(rule.substr(0, eq));
        } catch (const std::exception&) {
          throw UsageError("--forbid: bad color in '" + rule + "'");
        }
        spec.per_color[color] = pattern_flag("--forbid", rule.substr(eq + 1));
      }
      VerificationReport report = verify(c, spec);
      print.report(report_json(report));
      return report.passed ? 0 : 1;
    }

    if (partition_cmd->parsed()) {
      EdgeColoring c = load_coloring(input);
      try {
        GallaiPartition p = gallai_partition(c);
        json rows = json::array();
        for (int i = 0; i + 1 < p.ell(); ++i) {
          json row = json::array();
          for (int j = i + 1; j < p.ell(); ++j) row.push_back(p.quotient(i, j));
          rows.push_back(row);
        }
        print.report({{"parts", p.parts},
                      {"quotient_colors", p.quotient.colors_used()},
                      {"quotient", rows},
                      {"ell", p.ell()}});
        return 0;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::RainbowTriangle) throw;
        print.report({{"error", std::string(to_string(e.code()))}, {"witness", e.detail()}});
        return 1;
      }
    }

    if (formula_cmd->parsed()) {
      const PatternId target = formula_target(pattern_flag("--target", target_text));
      if (k < 1) throw UsageError("--k: must be >= 1");
      GrValue v;
      Count lower = 0;
      if (s >= 0) {
        if (target != PatternId::kipas(4))
          throw UsageError("--s: only meaningful with --target kipas(4) or h12");
        if (s > k) throw UsageError("--s: must satisfy 0 <= s <= k");
        v = gr_mixed_value(k, s);
        lower = w_value(k, s);
      } else if (conjecture) {
        if (target.family != PatternFamily::Kipas)
          throw UsageError("--conjecture: needs a kipas(m) target");
        v = conjecture_kipas(target.param, k, r2);
        lower = g_value(target, k, r2);
      } else {
        v = gr_value(target, k);
        lower = g_value(target, k);
      }
      print.summary({{"value", v.value}, {"branch", v.branch}, {"lower_construction_size", lower}});
      return 0;
    }

    if (search_cmd->parsed()) {
      SearchProblem problem{n, per_color_flag(per_color), gallai,
                            mode == "first" ? SearchMode::FirstWitness
                                            : SearchMode::ProveExhausted};
      SearchOutcome outcome = exhaustive_check(problem);
      const bool found = outcome.kind == SearchOutcome::Kind::Witness;
      json j = {{"result", found ? "witness" : "exhausted"},
                {"n", n},
                {"k", problem.k()},
                {"nodes_explored", outcome.nodes_explored},
                {"symmetry_reduced", outcome.symmetry_reduced}};
      if (problem.mode == SearchMode::ProveExhausted) j["witness_count"] = outcome.witness_count;
      if (outcome.witness) {
        if (json_mode) j["witness"] = serialize(*outcome.witness);
        print.summary(j);
        if (!json_mode) out << serialize(*outcome.witness);
      } else {
        print.summary(j);
      }
      return found ? 0 : 1;
    }

    if (encode_cmd->parsed()) {
      auto rules = per_color_flag(per_color);
      if (static_cast<int>(rules.size()) != k)
        throw UsageError("--per-color: expected " + std::to_string(k) + " entries");
      CnfDocument doc = encode_cnf(SearchProblem{n, rules, gallai, SearchMode::FirstWitness});
      write_file(out_path, to_dimacs(doc));
      print.summary({{"out", out_path},
                     {"variables", doc.num_vars},
                     {"clauses", doc.clauses.size()},
                     {"alo", doc.alo_clauses},
                     {"amo", doc.amo_clauses},
                     {"rainbow", doc.rainbow_clauses},
                     {"pattern", doc.pattern_clauses}});
      return 0;
    }

    if (decode_cmd->parsed()) {
      CnfDocument doc = parse_dimacs(read_file(cnf_path));
      const std::string model = read_file(model_path);
      if (claims_unsat(model)) {
        print.summary({{"result", "unsat"}});
        return 1;
      }
      const std::vector<int> assignment = parse_model(model);
      if (!satisfies(doc, assignment)) {
        print.summary({{"result", "model-violates-cnf"}});
        return 1;
      }
      EdgeColoring c = decode_assignment(doc, assignment, n, k);
      json j = {{"result", "decoded"}, {"size", c.n()}, {"colors_used", c.colors_used()}};
      if (!out_path.empty()) {
        write_file(out_path, serialize(c));
        j["out"] = out_path;
        print.summary(j);
      } else if (json_mode) {
        j["grc"] = serialize(c);
        print.summary(j);
      } else {
        print.summary(j);
        out << serialize(c);
      }
      return 0;
    }

    if (catalog_cmd->parsed()) {
      json entries = json::array();
      for (PatternId id : catalog_ids()) {
        Pattern p = resolve(id);
        json edges = json::array();
        for (auto [a, b] : p.edges) edges.push_back({a, b});
        entries.push_back({{"id", id.to_string()},
                           {"vertices", p.m},
                           {"edges", edges},
                           {"chromatic_number", chromatic_number(p)}});
      }
      if (json_mode) {
        out << entries.dump() << '\n';
      } else {
        for (const auto& e : entries)
          out << e["id"].get<std::string>() << " m=" << e["vertices"] << " chi=" << e["chromatic_number"]
              << " edges=" << e["edges"].dump() << '\n';
      }
      return 0;
    }

    if (regenerate_cmd->parsed()) {
      const std::string dir = fixture_dir.empty() ? default_fixture_dir() : fixture_dir;
      json written = regenerate_fixtures(dir);
      if (json_mode)
        out << json{{"written", written}}.dump() << '\n';
      else
        for (const auto& path : written) out << path.get<std::string>() << '\n';
      return 0;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace gr::cli
