#pragma once

namespace gr {

/// Worker count used by internal parallel loops (verification over colors,
/// search over top-level branches). 0 selects the hardware concurrency.
/// Results never depend on this setting.
void set_thread_count(int threads);
int thread_count();

}  // namespace gr
