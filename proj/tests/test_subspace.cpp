#include "doctest.h"

#include <random>
#include <set>

#include "linset/subspace.hpp"

using namespace linset;

namespace {

Subspace random_subspace(const TowerPtr& F, int k, std::mt19937& rng) {
  for (;;) {
    std::vector<uint32_t> v;
    for (int i = 0; i < k; ++i) v.push_back(rng() % F->size());
    auto U = Subspace::span(F, v);
    if (U.dim() == k) return U;
  }
}

// Brute-force span: closure of all F_q combinations.
std::set<uint32_t> closure(const TowerPtr& F, const std::vector<uint32_t>& gens) {
  std::set<uint32_t> s{0};
  for (uint32_t g : gens) {
    std::set<uint32_t> next;
    for (uint32_t e : s)
      for (uint32_t c = 0; c < F->q(); ++c) next.insert(F->add(e, F->mul(c, g)));
    s.swap(next);
  }
  return s;
}

}  // namespace

TEST_CASE("span basics") {
  auto F = FieldTower::make(3, 1, 4);
  CHECK(Subspace::span(F, std::vector<uint32_t>{}).dim() == 0);
  CHECK(Subspace::span(F, std::vector<uint32_t>{1, 3, 9, 27}) == Subspace::full(F, Ambient::Fqn));
  std::mt19937 rng(1);
  for (int r = 0; r < 30; ++r) {
    std::vector<uint32_t> g;
    for (int i = 0; i < 3; ++i) g.push_back(rng() % 81);
    auto U = Subspace::span(F, g);
    auto m = U.members();
    uint64_t expect = 1;
    for (int i = 0; i < U.dim(); ++i) expect *= 3;
    CHECK(m.size() == expect);
    auto cl = closure(F, g);
    CHECK(std::vector<uint32_t>(cl.begin(), cl.end()) == m.values());
    CHECK(Subspace::span(F, m.values()) == U);
    for (uint32_t a = 0; a < 81; ++a) CHECK(U.contains(a) == (cl.count(a) == 1));
  }
}

TEST_CASE("member order follows basis coordinates") {
  auto F = FieldTower::make(3, 1, 4);
  auto U = Subspace::span(F, std::vector<uint32_t>{5, 30});
  auto b = U.basis_elems();
  auto m = U.member_elems();
  CHECK(m[1] == b[0]);
  CHECK(m[3] == b[1]);
  auto W = Subspace::span(F, std::vector<Vec2>{{1, 2}, {7, 0}});
  auto bv = W.basis_vecs();
  auto mv = W.member_vecs();
  CHECK(mv[1] == bv[0]);
  CHECK(mv[3] == bv[1]);
  CHECK(mv.size() == 9);
}

TEST_CASE("intersection and sum") {
  auto F = FieldTower::make(2, 1, 4);
  std::mt19937 rng(2);
  auto full = Subspace::full(F, Ambient::Fqn);
  auto zero = Subspace::zero(F, Ambient::Fqn);
  for (int r = 0; r < 100; ++r) {
    auto U = random_subspace(F, 1 + rng() % 3, rng);
    auto W = random_subspace(F, 1 + rng() % 3, rng);
    auto V = random_subspace(F, 1 + rng() % 3, rng);
    CHECK(intersect(U, full) == U);
    CHECK(intersect(U, zero) == zero);
    auto I = intersect(U, W);
    CHECK(U.dim() + W.dim() == I.dim() + sum(U, W).dim());
    auto mu = U.members(), mw = W.members();
    CHECK(I.members() == mu.intersect(mw));
    // Modular law: U <= V implies U + (W cap V) = (U + W) cap V.
    auto UV = intersect(U, V);
    CHECK(sum(UV, intersect(W, V)) == intersect(sum(UV, W), V));
  }
  auto E = Subspace::zero(F, Ambient::Fqn2);
  CHECK_THROWS_AS(intersect(full, E), Error);
}

TEST_CASE("ratio sets") {
  auto F = FieldTower::make(2, 1, 4);
  auto Fq = subfield_space(F, 1);
  CHECK(ratio_set(Fq).values() == std::vector<uint32_t>{0, 1});
  auto K = subfield_space(F, 2);
  CHECK(ratio_set(K) == K.members());
  std::mt19937 rng(3);
  for (int r = 0; r < 20; ++r) {
    auto S = random_subspace(F, 2, rng);
    auto R = ratio_set(S);
    for (uint32_t x : R.values())
      if (x) CHECK(R.contains(F->inv(x)));
    if (S.dim() >= 1) CHECK(R.contains(1));
  }
}

TEST_CASE("ratio-set condition matches scaled intersections") {
  for (auto [p, n] : {std::pair{2, 4}, {3, 4}}) {
    auto F = FieldTower::make(p, 1, n);
    auto Fq = subfield_space(F, 1).members();
    std::mt19937 rng(4 + p);
    int agree = 0, both_true = 0;
    for (int r = 0; r < 200; ++r) {
      auto S = random_subspace(F, 2, rng);
      auto T = random_subspace(F, 2, rng);
      bool ratio = ratio_set(S).intersect(ratio_set(T)) == Fq;
      bool scaled = max_scaled_intersection(S, T).max_dim <= 1;
      agree += ratio == scaled;
      both_true += ratio && scaled;
    }
    CHECK(agree == 200);
    CHECK(both_true > 0);
  }
}

TEST_CASE("scattered with respect to a subfield") {
  auto F = FieldTower::make(3, 1, 4);
  auto K = subfield_space(F, 2);
  auto r = scattered_wrt(K, 2);
  CHECK_FALSE(r.scattered);
  CHECK(r.witness == 1u);
  CHECK(scattered_wrt(Subspace::span(F, std::vector<uint32_t>{7}), 2).scattered);
  CHECK_THROWS_AS(scattered_wrt(K, 3), Error);
  // {u + xi u^q : u in F_9} with xi outside F_9.
  const auto& sub = F->subfield_elements(2);
  uint32_t xi = 0;
  for (uint32_t a = 0; a < 81; ++a)
    if (!F->in_subfield(a, 2)) {
      xi = a;
      break;
    }
  std::vector<uint32_t> g;
  for (uint32_t u : sub) g.push_back(F->add(u, F->mul(xi, F->frob(u, 1))));
  auto S = Subspace::span(F, g);
  CHECK(S.dim() == 2);
  CHECK(scattered_wrt(S, 2).scattered);
}
