#pragma once

// Reproducible random objects for the verification suites.

#include <random>
#include <utility>

#include "linset/bases.hpp"
#include "linset/linpoly.hpp"
#include "linset/subspace.hpp"

namespace linset {

using Rng = std::mt19937_64;

uint32_t random_element(const FieldTower& F, Rng& rng);
uint32_t random_nonzero(const FieldTower& F, Rng& rng);
// k-dimensional F_q-subspace of F_{q^n}.
Subspace random_subspace(const TowerPtr& F, int k, Rng& rng);
// (T, S) with F_{q^n} = T + S, dim T = t.
std::pair<Subspace, Subspace> random_direct_sum(const TowerPtr& F, int t, Rng& rng);
OrderedBasis random_basis(const TowerPtr& F, Rng& rng);
// Over F_{q^m}, m = 0 meaning n.
LinPoly random_poly(const TowerPtr& F, Rng& rng, int m = 0);

}  // namespace linset
