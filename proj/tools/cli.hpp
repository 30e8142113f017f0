#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gr::cli {

/// Runs one `gallai` command. `args` excludes the program name. Returns the
/// process exit code (2 for usage errors).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gr::cli
