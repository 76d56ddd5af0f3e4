#pragma once

namespace linset {

// Every kernel that has an OpenMP path also keeps its serial loop; the two
// must produce identical results, which the tests check.
enum class Exec { Serial, Parallel };

// Worker count used by Exec::Parallel kernels.
void set_threads(int n);
int threads();

}  // namespace linset
