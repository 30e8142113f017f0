#pragma once

#include <functional>

namespace gr::detail {

/// Runs body(0) ... body(count-1), spread over thread_count() workers.
/// Callers write results into per-index slots so the outcome is independent
/// of scheduling.
void parallel_for(int count, const std::function<void(int)>& body);

}  // namespace gr::detail
