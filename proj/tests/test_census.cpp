#include "doctest.h"

#include <set>

#include "linset/census.hpp"
#include "linset/linset.hpp"

using namespace linset;

namespace {

// All k-subspaces of F_{q^n}^2 found by spanning every k-tuple of vectors.
Census census_by_spanning(const TowerPtr& F, int k) {
  const uint32_t Q = F->size();
  std::vector<Vec2> all;
  for (uint32_t x = 0; x < Q; ++x)
    for (uint32_t y = 0; y < Q; ++y)
      if (x || y) all.push_back({x, y});
  std::set<std::vector<uint32_t>> seen;
  Census c;
  c.k = k;
  std::vector<size_t> idx(k, 0);
  for (;;) {
    std::vector<Vec2> v;
    for (size_t i : idx) v.push_back(all[i]);
    Subspace U = Subspace::span(F, v);
    if (U.dim() == k && seen.insert(U.rref().a).second) {
      auto L = linear_set(U, Exec::Serial);
      ++c.subspaces;
      ++c.sizes[L.size()];
      std::vector<uint64_t> N(L.spectrum().begin() + 1, L.spectrum().end());
      ++c.spectra[N];
    }
    int i = k - 1;
    while (i >= 0 && ++idx[i] == all.size()) idx[i--] = 0;
    if (i < 0) break;
  }
  return c;
}

}  // namespace

TEST_CASE("Gaussian binomials") {
  CHECK(gaussian_binomial(2, 8, 4) == 200787);
  CHECK(gaussian_binomial(2, 4, 2) == 35);
  CHECK(gaussian_binomial(3, 4, 2) == 130);
  CHECK(gaussian_binomial(2, 6, 3) == 1395);
  CHECK(gaussian_binomial(5, 3, 0) == 1);
  CHECK(gaussian_binomial(5, 3, 3) == 1);
  CHECK(gaussian_binomial(5, 3, 4) == 0);
}

TEST_CASE("census matches span enumeration") {
  for (auto [p, n, k] : {std::tuple{2, 2, 2}, std::tuple{2, 2, 3}, std::tuple{3, 2, 2}, std::tuple{2, 3, 2}}) {
    auto F = FieldTower::make(p, 1, n);
    auto ref = census_by_spanning(F, k);
    for (Exec ex : {Exec::Serial, Exec::Parallel}) {
      auto c = rank_census(F, k, ex);
      CHECK(c.subspaces == c.expected);
      CHECK(c.subspaces == ref.subspaces);
      CHECK(c.sizes == ref.sizes);
      CHECK(c.spectra == ref.spectra);
    }
  }
}

TEST_CASE("rank-4 census over F_16") {
  auto F = FieldTower::make(2, 1, 4);
  auto c = rank_census(F, 4, Exec::Parallel);
  CHECK(c.subspaces == 200787);
  auto sizes = pg1q4_sizes(2);
  uint64_t listed = 0;
  for (auto [size, count] : c.sizes)
    if (std::find(sizes.begin(), sizes.end(), size) != sizes.end()) listed += count;
  CHECK(c.sizes.at(1) == 17);
  CHECK(c.single_point == 17);
  CHECK(listed + c.single_point == c.subspaces);
  CHECK(c.two_heavy > 0);
  CHECK(c.two_heavy_not_2 == 0);
  auto s = rank_census(F, 4, Exec::Serial);
  CHECK(s.sizes == c.sizes);
  CHECK(s.spectra == c.spectra);
}
