#include "gr/fixtures.hpp"

#include <filesystem>
#include <fstream>
#include <string_view>
#include <utility>

#include "gr/detection.hpp"
#include "gr/error.hpp"
#include "gr/formulas.hpp"
#include "gr/search.hpp"

namespace gr {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& embedded_fixture_table();
}

std::vector<PatternId> fixture_targets() {
  return {PatternId::h(1),     PatternId::h(2),     PatternId::h(3),     PatternId::h(4),
          PatternId::h(5),     PatternId::h(6),     PatternId::h(10),    PatternId::h(11),
          PatternId::kipas(2), PatternId::kipas(3), PatternId::kipas(4)};
}

std::string fixture_name(PatternId id) {
  id = formula_target(id);
  if (id.family == PatternFamily::Kipas) return "kipas" + std::to_string(id.param);
  return id.to_string();
}

std::optional<EdgeColoring> embedded_fixture(PatternId id) {
  const std::string name = fixture_name(id);
  for (const auto& [key, text] : detail::embedded_fixture_table())
    if (key == name) return parse(text);
  return std::nullopt;
}

EdgeColoring search_extremal(PatternId id, int n) {
  SearchProblem problem{n, {id, id}, false, SearchMode::FirstWitness};
  SearchOutcome outcome = exhaustive_check(problem);
  if (!outcome.witness)
    throw Error(ErrorCode::NoFixtureAndSearchFailed,
                "no 2-coloring of K_" + std::to_string(n) + " avoids " + id.to_string());
  if (!verify(*outcome.witness, AvoidanceSpec::forbid_all(id, 2, false)).passed)
    throw Error(ErrorCode::CertificationFailed, "search witness failed verification");
  return *outcome.witness;
}

std::string default_fixture_dir() { return GR_FIXTURE_SOURCE_DIR; }

std::vector<std::string> regenerate_fixtures(const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> written;
  for (PatternId id : fixture_targets()) {
    const int n = *RamseyTable::standard().r2(id) - 1;
    EdgeColoring coloring = search_extremal(id, n);
    const auto path = (std::filesystem::path(dir) / (fixture_name(id) + ".grc")).string();
    std::ofstream out(path, std::ios::binary);
    out << serialize(coloring);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
    written.push_back(path);
  }
  return written;
}

}  // namespace gr
