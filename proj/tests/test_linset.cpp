#include "doctest.h"

#include <random>

#include "linset/linset.hpp"

using namespace linset;

namespace {

LinPoly random_poly(const TowerPtr& F, std::mt19937& rng) {
  std::vector<uint32_t> c(F->n());
  for (auto& a : c) a = rng() % F->size();
  return LinPoly(F, c);
}

Subspace product(const Subspace& T, const Subspace& S) {
  std::vector<Vec2> g;
  for (uint32_t a : T.basis_elems()) g.push_back({a, 0});
  for (uint32_t b : S.basis_elems()) g.push_back({0, b});
  return Subspace::span(T.tower(), g);
}

}  // namespace

TEST_CASE("points") {
  auto F = FieldTower::make(3, 1, 2);
  CHECK(point_of(*F, {2, 2}).key == 1);
  CHECK(point_of(*F, {0, 5}) == point_inf(*F));
  CHECK(representative(*F, point_inf(*F)) == Vec2{0, 1});
  CHECK_THROWS_AS(point_of(*F, {0, 0}), Error);
}

TEST_CASE("Baer subline") {
  auto F = FieldTower::make(2, 1, 4);
  auto K = subfield_space(F, 2);
  auto L = linear_set(product(K, K));
  CHECK(L.size() == 5);
  CHECK(L.spectrum_map() == std::map<int, uint64_t>{{2, 5}});
  auto cp = complementary_pair(L);
  REQUIRE(cp.has_value());
  CHECK(cp->P == L.points()[0].point);
  CHECK(cp->Q == L.points()[1].point);
  auto G = FieldTower::make(3, 1, 4);
  auto L3 = linear_set(product(subfield_space(G, 2), subfield_space(G, 2)));
  CHECK(L3.size() == 10);
  CHECK(L3.spectrum_map() == std::map<int, uint64_t>{{2, 10}});
}

TEST_CASE("graphs") {
  auto F = FieldTower::make(2, 1, 4);
  auto Lt = linear_set_of(LinPoly::trace(F));
  CHECK(Lt.size() == 9);
  CHECK(Lt.spectrum_map() == std::map<int, uint64_t>{{1, 8}, {3, 1}});
  CHECK(Lt.weight({0}) == 3);
  auto L0 = linear_set_of(LinPoly::zero(F));
  CHECK(L0.size() == 1);
  CHECK(L0.points()[0] == WeightedPoint{{0}, 4});
  auto L1 = linear_set_of(LinPoly::identity(F));
  CHECK(L1.points()[0] == WeightedPoint{{1}, 4});
  auto G = FieldTower::make(3, 1, 4);
  auto Lm = linear_set_of(LinPoly::monomial(G, 1));
  CHECK(Lm.size() == 40);
  CHECK(Lm.spectrum_map() == std::map<int, uint64_t>{{1, 40}});
  CHECK_FALSE(complementary_pair(Lm).has_value());
  auto G5 = FieldTower::make(3, 1, 5);
  CHECK(linear_set_of(LinPoly::trace(G5)).spectrum_map() == std::map<int, uint64_t>{{1, 81}, {4, 1}});
}

TEST_CASE("three weight routes agree") {
  for (auto [p, n] : {std::pair{2, 4}, {3, 4}, {2, 5}}) {
    auto F = FieldTower::make(p, 1, n);
    std::mt19937 rng(11 + p + n);
    for (int r = 0; r < 25; ++r) {
      int k = 1 + rng() % (2 * n);
      std::vector<Vec2> g;
      for (int i = 0; i < k; ++i) g.push_back({static_cast<uint32_t>(rng() % F->size()), static_cast<uint32_t>(rng() % F->size())});
      auto U = Subspace::span(F, g);
      if (U.dim() == 0) continue;
      auto a = linear_set(U, Exec::Serial, WeightMethod::Solve);
      auto b = linear_set(U, Exec::Parallel, WeightMethod::Solve);
      auto c = linear_set(U, Exec::Serial, WeightMethod::Count);
      CHECK(a.points() == b.points());
      CHECK(a.points() == c.points());
      CHECK(a.spectrum() == spectrum_by_point_scan(U, Exec::Serial));
      CHECK(a.spectrum() == spectrum_by_point_scan(U, Exec::Parallel));
    }
  }
}

TEST_CASE("graph size equals ratio image") {
  for (int p : {2, 3}) {
    auto F = FieldTower::make(p, 1, 4);
    std::mt19937 rng(20 + p);
    for (int r = 0; r < 100; ++r) {
      auto f = random_poly(F, rng);
      if (f.is_zero()) continue;
      CHECK(linear_set_of(f).size() == ratio_image_size(f));
    }
  }
}

TEST_CASE("duality") {
  auto F = FieldTower::make(2, 1, 4);
  auto tr = LinPoly::trace(F);
  CHECK(dual_linear_set(tr).points() == linear_set_of(tr).points());
  std::mt19937 rng(30);
  for (int r = 0; r < 20; ++r) {
    auto f = random_poly(F, rng);
    CHECK(linear_set_of(f.adjoint().adjoint()).points() == linear_set_of(f).points());
    // The dual has the same size.
    CHECK(dual_linear_set(f).size() == linear_set_of(f).size());
  }
}

TEST_CASE("product spaces and the two-weight bound") {
  auto F = FieldTower::make(2, 1, 4);
  auto tr = LinPoly::trace(F);
  auto b = check_bound_two_weight(linear_set_of(tr), 3, 1);
  CHECK(b.applicable);
  CHECK(b.lower == 9);
  CHECK(b.upper == 9);
  CHECK(b.observed == 9);
  CHECK(b.ok);
  auto G = FieldTower::make(3, 1, 4);
  auto Lm = linear_set_of(LinPoly::monomial(G, 1));
  CHECK_FALSE(check_bound_two_weight(Lm).applicable);
  std::mt19937 rng(40);
  for (int r = 0; r < 30; ++r) {
    std::vector<uint32_t> a{static_cast<uint32_t>(rng() % 81), static_cast<uint32_t>(rng() % 81)};
    std::vector<uint32_t> c{static_cast<uint32_t>(rng() % 81)};
    auto T = Subspace::span(G, a), S = Subspace::span(G, c);
    if (T.dim() != 2 || S.dim() != 1) continue;
    auto L = linear_set(product(T, S));
    CHECK(L.weight({0}) == 2);
    CHECK(L.weight(point_inf(*G)) == 1);
    auto cb = check_bound_two_weight(L);
    CHECK(cb.applicable);
    CHECK(cb.ok);
    auto cp = complementary_pair(L);
    REQUIRE(cp.has_value());
  }
  CHECK_THROWS_AS(linear_set(Subspace::zero(G, Ambient::Fqn2)), Error);
}
