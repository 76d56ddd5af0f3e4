#include "linset/exec.hpp"

#include <omp.h>

#include <algorithm>

namespace linset {

namespace {
int g_threads = 0;
}

void set_threads(int n) { g_threads = std::max(1, n); }

int threads() { return g_threads > 0 ? g_threads : std::max(1, omp_get_max_threads()); }

}  // namespace linset
