#pragma once

// Exhaustive enumeration of rank-k F_q-subspaces of F_{q^n}^2.

#include <functional>
#include <map>
#include <vector>

#include "linset/exec.hpp"
#include "linset/gf.hpp"

namespace linset {

// Number of k-dimensional subspaces of F_q^N.
uint64_t gaussian_binomial(uint64_t q, int N, int k);

// Sizes of the non-trivial linear sets of rank 4 in PG(1, q^4):
// q^2+1, q^3+q^2+q+1, q^3+1, q^3+q^2+1, q^3+q^2-q+1.
std::vector<uint64_t> pg1q4_sizes(uint64_t q);

struct Census {
  int k = 0;
  uint64_t subspaces = 0;
  uint64_t expected = 0;  // gaussian_binomial(q, 2n, k)
  std::map<uint64_t, uint64_t> sizes;                   // |L_U| -> count
  std::map<std::vector<uint64_t>, uint64_t> spectra;   // (N_1..N_k) -> count
  uint64_t single_point = 0;   // U inside one point <v>_{F_{q^n}}
  uint64_t two_heavy = 0;      // exactly two points of weight > 1
  uint64_t two_heavy_not_2 = 0;  // of those, not both of weight 2
};

// Every subspace is visited once through its reduced row-echelon form.
// `progress` receives the number of subspaces done so far (serial path only
// calls it from one thread).
Census rank_census(const TowerPtr& F, int k, Exec ex = Exec::Parallel,
                   const std::function<void(uint64_t, uint64_t)>& progress = {});

}  // namespace linset
