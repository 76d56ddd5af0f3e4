#include "doctest.h"

#include <random>
#include <set>

#include "linset/gf.hpp"

using namespace linset;

TEST_CASE("tower sizes") {
  auto F = FieldTower::make(2, 1, 4);
  CHECK(F->q() == 2);
  CHECK(F->size() == 16);
  auto G = FieldTower::make(3, 1, 4);
  CHECK(G->q() == 3);
  CHECK(G->size() == 81);
  auto H = FieldTower::make(2, 2, 3);
  CHECK(H->q() == 4);
  CHECK(H->size() == 64);
}

TEST_CASE("default moduli are the smallest irreducibles") {
  auto F = FieldTower::make(2, 1, 4);
  // x^4 + x + 1
  CHECK(F->ext_modulus() == std::vector<uint32_t>{1, 1, 0, 0, 1});
  auto G = FieldTower::make(3, 1, 2);
  // x^2 + 1
  CHECK(G->ext_modulus() == std::vector<uint32_t>{1, 0, 1});
  auto H = FieldTower::make(3, 2, 2);
  CHECK(H->base_modulus() == std::vector<int>{1, 0, 1});
}

TEST_CASE("reducible modulus names a factor") {
  TowerSpec s;
  s.p = 2;
  s.h = 1;
  s.n = 4;
  s.ext_modulus = std::vector<std::vector<int>>{{1}, {0}, {1}, {0}, {1}};
  try {
    FieldTower::make(s);
    FAIL("expected ReducibleModulus");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ReducibleModulus);
    CHECK(e.witness() == "[1,1,1]");
  }
  CHECK_THROWS_AS(FieldTower::make(4, 1, 2), Error);
  CHECK_THROWS_AS(FieldTower::make(2, 1, 1), Error);
}

TEST_CASE("desk-scale guard") {
  CHECK_THROWS_AS(FieldTower::make(2, 1, 25), Error);
  TowerSpec s;
  s.p = 2;
  s.n = 25;
  s.allow_large = true;
  CHECK_NOTHROW(FieldTower::make(s));
}

TEST_CASE("field axioms against the schoolbook product") {
  for (auto [p, h, n] : {std::tuple{2, 1, 4}, {3, 1, 2}, {2, 2, 3}, {3, 1, 4}, {5, 1, 2}}) {
    auto F = FieldTower::make(p, h, n);
    for (uint32_t a = 0; a < F->size(); ++a) {
      if (a) CHECK(F->mul(a, F->inv(a)) == 1);
      CHECK(F->pow(a, F->size()) == a);
      for (uint32_t b = 0; b < F->size(); b += 7) {
        CHECK(F->mul(a, b) == F->mul_reference(a, b));
        CHECK(F->sub(F->add(a, b), b) == a);
      }
    }
  }
}

TEST_CASE("generator has full order") {
  auto F = FieldTower::make(3, 1, 4);
  std::set<uint32_t> seen;
  uint32_t x = 1;
  for (uint32_t k = 0; k + 1 < F->size(); ++k) {
    seen.insert(x);
    x = F->mul_reference(x, F->generator());
  }
  CHECK(x == 1);
  CHECK(seen.size() == 80);
}

TEST_CASE("frobenius") {
  auto F = FieldTower::make(2, 2, 3);
  std::mt19937 rng(5);
  for (int r = 0; r < 200; ++r) {
    uint32_t a = rng() % F->size(), b = rng() % F->size();
    int i = static_cast<int>(rng() % 7);
    CHECK(F->frob(a, 0) == a);
    CHECK(F->frob(a, 3) == a);
    CHECK(F->frob(F->add(a, b), i) == F->add(F->frob(a, i), F->frob(b, i)));
    CHECK(F->frob(F->mul(a, b), i) == F->mul(F->frob(a, i), F->frob(b, i)));
    CHECK(F->frob(a, 1) == F->aut(a, 2));
    // matrix route
    std::vector<uint32_t> c(3), out(3, 0);
    F->to_coords(a, c);
    const auto& M = F->frobenius_matrix(i);
    for (int row = 0; row < 3; ++row)
      for (int col = 0; col < 3; ++col) out[row] = F->fq_add(out[row], F->fq_mul(M.at(row, col), c[col]));
    CHECK(F->from_coords(out) == F->frob(a, i));
  }
}

TEST_CASE("trace") {
  auto F = FieldTower::make(2, 1, 4);
  int zeros = 0;
  for (uint32_t a = 0; a < 16; ++a) {
    if (F->trace(a, 1) == 0) ++zeros;
    CHECK(F->in_subfield(F->trace(a, 2), 2));
    uint32_t b = F->trace(a, 2);
    CHECK(F->trace(a, 1) == F->add(b, F->frob(b, 1)));
  }
  CHECK(zeros == 8);
  CHECK_THROWS_AS(F->trace(1, 3), Error);

  auto G = FieldTower::make(3, 1, 4);
  for (uint32_t a = 0; a < 3; ++a) CHECK(G->trace(a, 1) == G->fq_from_int(4 * a));
  std::set<uint32_t> img;
  for (uint32_t a = 0; a < 81; ++a) img.insert(G->trace(a, 2));
  CHECK(img.size() == 9);
  // F_{q^2}-linearity.
  for (uint32_t c : G->subfield_elements(2))
    for (uint32_t a = 0; a < 81; a += 5) CHECK(G->trace(G->mul(c, a), 2) == G->mul(c, G->trace(a, 2)));
}

TEST_CASE("trace form is nondegenerate") {
  auto F = FieldTower::make(2, 1, 4);
  for (uint32_t a = 1; a < 16; ++a) {
    bool hit = false;
    for (uint32_t b = 0; b < 16 && !hit; ++b) hit = F->trace(F->mul(a, b), 1) != 0;
    CHECK(hit);
  }
}

TEST_CASE("norm") {
  auto F = FieldTower::make(3, 1, 4);
  CHECK(F->norm(0, 1) == 0);
  for (uint32_t a = 0; a < 81; ++a) {
    CHECK(F->norm(a, 4) == a);
    CHECK(F->in_subfield(F->norm(a, 2), 2));
  }
  auto G = FieldTower::make(3, 1, 2);
  std::set<uint32_t> img;
  for (uint32_t a = 1; a < 9; ++a) img.insert(G->norm(a, 1));
  CHECK(img == std::set<uint32_t>{1, 2});
  for (uint32_t a = 1; a < 9; ++a)
    for (uint32_t b = 1; b < 9; ++b) CHECK(G->norm(G->mul(a, b), 1) == G->mul(G->norm(a, 1), G->norm(b, 1)));
}

TEST_CASE("subfields") {
  auto G = FieldTower::make(3, 1, 4);
  int count = 0;
  for (uint32_t a = 0; a < 81; ++a) count += G->in_subfield(a, 2);
  CHECK(count == 9);
  CHECK(G->subfield_elements(2).size() == 9);
  auto F = FieldTower::make(2, 1, 4);
  std::set<uint32_t> fixed;
  for (uint32_t a = 0; a < 16; ++a)
    if (F->frob(a, 2) == a) fixed.insert(a);
  const auto& els = F->subfield_elements(2);
  CHECK(std::set<uint32_t>(els.begin(), els.end()) == fixed);
  CHECK(F->subfield_basis(2).size() == 2);
  CHECK(F->subfield_basis(1) == std::vector<uint32_t>{1});
}

TEST_CASE("minimal polynomials") {
  auto G = FieldTower::make(3, 1, 4);
  CHECK(G->min_poly(2) == std::vector<uint32_t>{1, 1});  // x - 2 = x + 1
  CHECK(G->min_poly(3) == G->ext_modulus());
  std::mt19937 rng(9);
  for (int r = 0; r < 50; ++r) {
    uint32_t l = rng() % 81;
    auto m = G->min_poly(l);
    CHECK(4 % (m.size() - 1) == 0);
    uint32_t acc = 0, pw = 1;
    for (uint32_t c : m) {
      acc = G->add(acc, G->mul(c, pw));
      pw = G->mul(pw, l);
    }
    CHECK(acc == 0);
  }
}

TEST_CASE("element handles") {
  auto F = FieldTower::make(2, 1, 4);
  Fe a = F->gen();
  CHECK((a * a.inv()).is_one());
  CHECK((a + Fe()) == a);
  CHECK_THROWS_AS(F->zero().inv(), Error);
  auto G = FieldTower::make(2, 1, 4);
  CHECK_THROWS_AS(a + G->one(), Error);
}

TEST_CASE("rref and nullspace") {
  auto F = FieldTower::make(3, 1, 2);
  FqMatrix m(2, 3);
  m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 0;
  m.at(1, 0) = 2; m.at(1, 1) = 1; m.at(1, 2) = 0;
  auto ns = F->nullspace(m);
  CHECK(ns.rows == 2);
  for (int r = 0; r < ns.rows; ++r)
    for (int i = 0; i < 2; ++i) {
      uint32_t s = 0;
      for (int j = 0; j < 3; ++j) s = F->fq_add(s, F->fq_mul(m.at(i, j), ns.at(r, j)));
      CHECK(s == 0);
    }
}
