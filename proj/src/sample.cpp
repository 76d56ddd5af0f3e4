#include "linset/sample.hpp"

namespace linset {

uint32_t random_element(const FieldTower& F, Rng& rng) { return static_cast<uint32_t>(rng() % F.size()); }

uint32_t random_nonzero(const FieldTower& F, Rng& rng) {
  return 1 + static_cast<uint32_t>(rng() % (F.size() - 1));
}

Subspace random_subspace(const TowerPtr& F, int k, Rng& rng) {
  if (k < 0 || k > F->n()) throw Error(ErrorKind::InvalidArgument, "dimension out of range");
  if (k == 0) return Subspace::zero(F, Ambient::Fqn);
  for (;;) {
    std::vector<uint32_t> v;
    for (int i = 0; i < k; ++i) v.push_back(random_element(*F, rng));
    auto U = Subspace::span(F, v);
    if (U.dim() == k) return U;
  }
}

std::pair<Subspace, Subspace> random_direct_sum(const TowerPtr& F, int t, Rng& rng) {
  Subspace T = random_subspace(F, t, rng);
  for (;;) {
    Subspace S = random_subspace(F, F->n() - t, rng);
    if (intersect(T, S).dim() == 0) return {T, S};
  }
}

OrderedBasis random_basis(const TowerPtr& F, Rng& rng) {
  for (;;) {
    std::vector<uint32_t> v;
    for (int i = 0; i < F->n(); ++i) v.push_back(random_element(*F, rng));
    if (is_independent(*F, v)) return OrderedBasis(F, v);
  }
}

LinPoly random_poly(const TowerPtr& F, Rng& rng, int m) {
  if (m == 0) m = F->n();
  const auto& K = F->subfield_elements(m);
  std::vector<uint32_t> c(m);
  for (auto& a : c) a = K[rng() % K.size()];
  return LinPoly(F, c, m);
}

}  // namespace linset
