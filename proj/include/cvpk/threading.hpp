// Worker-count resolution: explicit override, then CVPK_THREADS, then the
// OpenMP default. All parallel code paths produce bit-identical results
// for any count.
#pragma once

namespace cvpk {

int resolve_threads(int override_count = 0);

}  // namespace cvpk
