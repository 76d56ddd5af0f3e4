#include "doctest.h"

#include "linset/equiv.hpp"
#include "linset/sample.hpp"

using namespace linset;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

// Plain loop over every map in canonical order; returns the first witness and its 1-based position.
std::pair<std::optional<SemilinearMap>, uint64_t> naive_brute(const Subspace& U, const Subspace& U2) {
  const auto& F = *U.tower();
  const uint32_t Q = F.size();
  uint64_t pos = 0;
  for (uint32_t a = 0; a < Q; ++a)
    for (uint32_t b = 0; b < Q; ++b)
      for (uint32_t c = 0; c < Q; ++c)
        for (uint32_t d = 0; d < Q; ++d) {
          Mat2 m{a, b, c, d};
          if (!det(F, m)) continue;
          for (int e = 0; e < F.aut_order(); ++e) {
            ++pos;
            SemilinearMap s{m, e};
            if (image(s, U) == U2) return {s, pos};
          }
        }
  return {std::nullopt, pos};
}

SemilinearMap random_map(const FieldTower& F, Rng& rng) {
  for (;;) {
    Mat2 m{random_element(F, rng), random_element(F, rng), random_element(F, rng), random_element(F, rng)};
    if (det(F, m)) return {m, static_cast<int>(rng() % F.aut_order())};
  }
}

}  // namespace

TEST_CASE("semilinear action") {
  auto F = FieldTower::make(2, 1, 4);
  Rng rng(3);
  auto [T, S] = random_direct_sum(F, 2, rng);
  Subspace U = product_space(T, S);
  CHECK(apply(SemilinearMap{}, U) == U);
  uint32_t l = F->generator();
  Subspace W = apply(SemilinearMap{Mat2{l, 0, 0, l}, 0}, U);
  CHECK(linear_set(W).point_set() == linear_set(U).point_set());
  for (int i = 0; i < 30; ++i) {
    auto m = random_map(*F, rng);
    Subspace X = product_space(random_subspace(F, 3, rng), subfield_space(F, 1));
    CHECK(linear_set(apply(m, X)).spectrum() == linear_set(X).spectrum());
    CHECK(spectrum_by_point_scan(image(m, U), Exec::Serial) == linear_set(U).spectrum());
  }
  CHECK(kind_of([&] { image(SemilinearMap{Mat2{1, 1, 1, 1}, 0}, U); }) == ErrorKind::SingularInput);
}

TEST_CASE("automorphism images") {
  auto F = FieldTower::make(2, 2, 3);
  Rng rng(5);
  Subspace V = random_subspace(F, 3, rng);
  CHECK(aut_image(V, 0) == V);
  for (int e = 0; e < F->aut_order(); ++e) CHECK(aut_image(aut_image(V, e), F->aut_order() - e) == V);
  CHECK(aut_image(subfield_space(F, 1), 1) == subfield_space(F, 1));
}

TEST_CASE("criteria: scaled and twisted factors are found") {
  auto F = FieldTower::make(3, 1, 4);
  Rng rng(17);
  int done = 0;
  while (done < 8) {
    auto [T, S] = random_direct_sum(F, 2, rng);
    if (!unique_weight_precondition(T, S)) continue;
    uint32_t l = random_nonzero(*F, rng), m = random_nonzero(*F, rng);
    int rho = static_cast<int>(rng() % 4);
    Subspace S2 = aut_image(S, rho).scaled(l), T2 = aut_image(T, rho).scaled(m);
    auto w = criteria_equivalent(S, T, S2, T2);
    REQUIRE(w);
    CHECK(image(w->map(*F), product_space(T, S)) == product_space(T2, S2));
    auto d = diagonal_scan(S, T, S2, T2);
    REQUIRE(d.first);
    CHECK(*d.first == *w);
    CHECK(d.found >= 1);
    ++done;
  }
}

TEST_CASE("criteria precondition") {
  auto F = FieldTower::make(2, 1, 4);
  Rng rng(1);
  auto [T, S] = random_direct_sum(F, 3, rng);
  CHECK_FALSE(unique_weight_precondition(T, S));
  CHECK(kind_of([&] { criteria_equivalent(S, T, S, T); }) == ErrorKind::PreconditionUniqueWeightFailed);
}

TEST_CASE("brute force matches a naive scan") {
  for (auto [p, h, n] : {std::tuple{2, 1, 2}, std::tuple{2, 1, 3}, std::tuple{3, 1, 2}}) {
    auto F = FieldTower::make(p, h, n);
    Rng rng(7 + n);
    for (int i = 0; i < 4; ++i) {
      Subspace U = product_space(random_subspace(F, 1, rng), random_subspace(F, n - 1, rng));
      Subspace U2 = i % 2 ? image(random_map(*F, rng), U)
                          : product_space(random_subspace(F, 1, rng), random_subspace(F, n - 1, rng));
      auto ref = naive_brute(U, U2);
      for (Exec ex : {Exec::Serial, Exec::Parallel}) {
        auto r = brute_equivalent(U, U2, kDefaultBudget, ex);
        CHECK(r.witness == ref.first);
        CHECK(r.checked == ref.second);
        CHECK(r.exhaustive == !ref.first);
        CHECK(r.required == ((F->size() * F->size() - 1) * (F->size() * F->size() - F->size()) * F->aut_order()));
      }
    }
  }
}

TEST_CASE("brute force: trace graph against its coordinate swap") {
  auto F = FieldTower::make(2, 1, 4);
  Subspace U = graph_space(LinPoly::trace(F));
  std::vector<Vec2> sw;
  for (Vec2 v : U.basis_vecs()) sw.push_back({v.y, v.x});
  Subspace U2 = Subspace::span(F, sw);
  auto r = brute_equivalent(U, U2);
  REQUIRE(r.witness);
  CHECK(image(*r.witness, U) == U2);
  CHECK_FALSE(r.exhaustive);
}

TEST_CASE("brute force budget") {
  auto F = FieldTower::make(3, 1, 4);
  Subspace U = graph_space(LinPoly::trace(F));
  try {
    brute_equivalent(U, U);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
    CHECK(e.detail().find("170035200") != std::string::npos);
  }
  CHECK(brute_required(*F) == 170035200ull);
}

TEST_CASE("criteria agree with brute force at q=2, n=4") {
  auto F = FieldTower::make(2, 1, 4);
  Rng rng(2024);
  int pairs = 0, equivalent = 0;
  while (pairs < 30) {
    auto T = random_subspace(F, 2, rng), S = random_subspace(F, 2, rng);
    if (!unique_weight_precondition(T, S)) continue;
    Subspace T2, S2;
    if (pairs % 2) {
      uint32_t l = random_nonzero(*F, rng), m = random_nonzero(*F, rng);
      int rho = static_cast<int>(rng() % 4);
      bool swap = rng() % 2;
      T2 = aut_image(swap ? S : T, rho).scaled(m);
      S2 = aut_image(swap ? T : S, rho).scaled(l);
    } else {
      T2 = random_subspace(F, 2, rng);
      S2 = random_subspace(F, 2, rng);
      if (!unique_weight_precondition(T2, S2)) continue;
    }
    auto c = criteria_equivalent(S, T, S2, T2);
    auto b = brute_equivalent(product_space(T, S), product_space(T2, S2));
    CHECK(c.has_value() == b.witness.has_value());
    CHECK(diagonal_scan(S, T, S2, T2, Exec::Serial).first == c);
    equivalent += c.has_value();
    ++pairs;
  }
  CHECK(equivalent >= 15);
}

TEST_CASE("Singer factorization") {
  auto F = FieldTower::make(3, 1, 4);
  const int t = 2;
  const auto& sub = F->subfield_elements(t);
  uint32_t a = 0, b = 0;
  for (uint32_t x : sub)
    for (uint32_t y : sub)
      if (!b && quadratic_irreducible(*F, t, x, y)) a = x, b = y;
  REQUIRE(b);
  auto id = singer_decompose(*F, t, Mat2{}, a, b);
  CHECK(id.mu0 == 1);
  CHECK(id.mu1 == 0);
  CHECK(id.alpha == 1);
  CHECK(id.beta == 0);
  Rng rng(99);
  for (int i = 0; i < 500; ++i) {
    Mat2 M;
    do {
      M = {sub[rng() % 9], sub[rng() % 9], sub[rng() % 9], sub[rng() % 9]};
    } while (!det(*F, M));
    auto f = singer_decompose(*F, t, M, a, b);
    CHECK(mul(*F, singer_matrix(*F, f.mu0, f.mu1, a, b), Mat2{1, f.beta, 0, f.alpha}) == M);
    CHECK(f.alpha != 0);
  }
  auto g = singer_decompose(*F, t, singer_matrix(*F, sub[4], sub[7], a, b), a, b);
  CHECK(g.alpha == 1);
  CHECK(g.beta == 0);
  CHECK(kind_of([&] { singer_decompose(*F, t, Mat2{1, 1, 1, 1}, a, b); }) == ErrorKind::SingularInput);
  // x^2 - x = x (x - 1)
  CHECK(kind_of([&] { singer_decompose(*F, t, Mat2{}, 1, 0); }) == ErrorKind::ReduciblePolynomial);
  uint32_t outside = first_outside_subfield(*F, t);
  CHECK(kind_of([&] { singer_decompose(*F, t, Mat2{outside, 0, 0, 1}, a, b); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("Singer sweep over GL(2,9)") {
  auto F = FieldTower::make(3, 1, 4);
  auto r = singer_sweep(*F, 2);
  CHECK(r.polynomials == (81 - 9) / 2);
  CHECK(r.matrices == (81 - 1) * (81 - 9));
  CHECK(r.reconstructed == r.polynomials * r.matrices);
  CHECK(r.failures == 0);
  auto s = singer_sweep(*F, 2, Exec::Serial);
  CHECK(s.reconstructed == r.reconstructed);
}

TEST_CASE("monomial classification: small t") {
  auto F = FieldTower::make(3, 1, 4);
  auto p = find_ex2_params(F, 1);
  CHECK(kind_of([&] { monomial_equiv_conditions(F, 1, 1, p.xi, p.xi, p.mu, p.mu, 0); }) == ErrorKind::TTooSmall);
}

TEST_CASE("monomial classification agrees with the criteria search") {
  auto F = FieldTower::make(3, 1, 6);
  const int t = 3;
  auto p = find_ex2_params(F, 1);
  auto same = monomial_equiv_conditions(F, 1, 1, p.xi, p.xi, p.mu, p.mu, 0);
  CHECK(same.case_II);
  CHECK(same.A == 1);
  CHECK(same.B == 0);
  CHECK(same.equivalent());

  std::vector<uint32_t> etas;
  for (uint32_t e = 0; e < F->size() && etas.size() < 6; e += 37)
    if (!F->in_subfield(e, t)) etas.push_back(e);
  etas.push_back(p.xi);
  std::map<std::string, int> seen;
  int compared = 0;
  for (int s : {1, 2})
    for (int s2 : {1, 2}) {
      auto [T, S] = monomial_factors(F, s, p.mu, p.xi);
      for (uint32_t eta : etas)
        for (uint32_t mu2 : F->subfield_elements(t)) {
          if (!mu2) continue;
          try {
            check_ex2_params(*F, s2, mu2, eta);
          } catch (const Error&) {
            continue;
          }
          auto [T2, S2] = monomial_factors(F, s2, mu2, eta);
          auto search = criteria_search(S2, T2, S, T);
          for (int sigma = 0; sigma < F->aut_order(); ++sigma) {
            auto mc = monomial_equiv_conditions(F, s, s2, p.xi, eta, p.mu, mu2, sigma);
            CHECK_MESSAGE(mc.equivalent() == search[sigma].has_value(),
                          "s=" << s << " s'=" << s2 << " eta=" << eta << " mu2=" << mu2 << " sigma=" << sigma
                               << " case=" << mc.label());
            ++seen[mc.label()];
            ++compared;
          }
        }
    }
  CHECK(compared > 500);
  CHECK(seen["none"] > 0);
  CHECK(seen.size() >= 3);
}

TEST_CASE("subfield factor is inequivalent to the monomial pair at q=3, t=2") {
  auto F = FieldTower::make(3, 1, 4);
  const int t = 2;
  uint32_t xi = first_outside_subfield(*F, t);
  uint32_t eta = xi;
  Subspace T = subfield_space(F, t);
  Subspace S = subfield_graph(LinPoly::monomial(F, 1, 1, t), eta).space;
  CHECK(product_space(T, S) == ex1_space(LinPoly::monomial(F, 1, 1, t), 0, xi, eta).space);
  auto p = find_ex2_params(F, 1);
  Subspace T2 = subfield_graph(LinPoly::monomial(F, 1, p.mu, t), p.xi).space;
  Subspace S2 = subfield_graph(LinPoly::monomial(F, 1, 1, t), p.xi).space;
  CHECK(product_space(T2, S2) == ex2_space(F, 1, p.mu, p.xi).space);
  auto d = diagonal_scan(S, T, S2, T2);
  CHECK(d.checked == uint64_t{80} * 80 * 4 * 2);
  CHECK(d.found == 0);
  CHECK_FALSE(criteria_equivalent(S, T, S2, T2));
  auto self = diagonal_scan(S2, T2, S2, T2, Exec::Serial);
  CHECK(self.found > 0);
  CHECK(self.first == criteria_equivalent(S2, T2, S2, T2));
}
