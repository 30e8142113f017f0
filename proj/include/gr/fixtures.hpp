#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gr/coloring.hpp"
#include "gr/pattern.hpp"

namespace gr {

/// Targets whose extremal 2-colorings are cached as GRC fixtures.
std::vector<PatternId> fixture_targets();

/// File stem for a target: "h1", "kipas3", ...
std::string fixture_name(PatternId id);

/// Fixture compiled into the library, if any.
std::optional<EdgeColoring> embedded_fixture(PatternId id);

/// First-witness search for a 2-coloring of K_n avoiding `id` in both
/// colors. NoFixtureAndSearchFailed when none exists.
EdgeColoring search_extremal(PatternId id, int n);

/// Directory the build embeds fixtures from.
std::string default_fixture_dir();

/// Re-runs every extremal search and writes <dir>/<name>.grc; returns the
/// written paths.
std::vector<std::string> regenerate_fixtures(const std::string& dir);

}  // namespace gr
