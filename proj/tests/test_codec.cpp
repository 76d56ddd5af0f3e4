#include "doctest.h"

#include "linset/codec.hpp"
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

}  // namespace

TEST_CASE("element codec round trip") {
  for (auto [p, h, n] : {std::tuple{2, 1, 4}, std::tuple{2, 2, 3}, std::tuple{3, 1, 4}}) {
    auto F = FieldTower::make(p, h, n);
    for (uint32_t a = 0; a < F->size(); ++a) {
      json j = element_to_json(*F, a);
      CHECK(j.size() == static_cast<size_t>(n));
      CHECK(j[0].size() == static_cast<size_t>(h));
      CHECK(element_from_json(*F, j) == a);
      CHECK(element_from_json(*F, json::parse(j.dump())) == a);
      CHECK(element_from_json(*F, element_pretty(*F, a, ElementStyle::Power)) == a);
    }
  }
}

TEST_CASE("element codec layout") {
  auto F = FieldTower::make(2, 2, 3);
  // packed index 1 + 2*4 + 3*16 -> coefficients 1, 2, 3 of F_4, digits little-endian
  CHECK(element_to_json(*F, 57) == json::parse("[[1,0],[0,1],[1,1]]"));
  auto G = FieldTower::make(3, 1, 2);
  CHECK(element_from_json(*G, json::parse("[2,1]")) == 5);
  CHECK(element_from_json(*G, "g^0") == 1);
  CHECK(element_from_json(*G, "g^-1") == G->inv(G->generator()));
  CHECK(kind_of([&] { element_from_json(*G, "h^2"); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { element_from_json(*G, json::parse("[3,0]")); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { element_from_json(*G, json::parse("[1]")); }) == ErrorKind::ParseError);
}

TEST_CASE("tower codec round trip") {
  TowerSpec s;
  s.p = 2;
  s.n = 4;
  s.ext_modulus = std::vector<std::vector<int>>{{1}, {0}, {0}, {1}, {1}};
  auto F = FieldTower::make(s);
  auto G = tower_from_json(json::parse(tower_to_json(*F).dump()));
  CHECK(G->same_as(*F));
  CHECK_FALSE(G->same_as(*FieldTower::make(2, 1, 4)));
  auto H = FieldTower::make(3, 2, 2);
  CHECK(tower_from_json(tower_to_json(*H))->same_as(*H));
  CHECK(kind_of([] { tower_from_json(json::parse(R"({"p":2})")); }) == ErrorKind::ParseError);
}

TEST_CASE("polynomial, subspace and spectrum codecs") {
  auto F = FieldTower::make(3, 1, 4);
  Rng rng(8);
  for (int i = 0; i < 20; ++i) {
    LinPoly f = random_poly(F, rng, i % 2 ? 4 : 2);
    CHECK(poly_from_json(F, json::parse(poly_to_json(f).dump())) == f);
    Subspace U = graph_space(random_poly(F, rng));
    CHECK(subspace_from_json(F, subspace_to_json(U)) == U);
    Subspace V = random_subspace(F, 1 + i % 4, rng);
    CHECK(subspace_from_json(F, subspace_to_json(V)) == V);
    auto sp = linear_set(U).spectrum_map();
    CHECK(spectrum_from_json(spectrum_to_json(sp)) == sp);
    Mat2 m{random_element(*F, rng), random_element(*F, rng), random_element(*F, rng), random_element(*F, rng)};
    CHECK(mat2_from_json(*F, mat2_to_json(*F, m)) == m);
  }
  CHECK(poly_pretty(LinPoly::trace(FieldTower::make(2, 1, 3)), ElementStyle::Power) == "x + x^q + x^{q^2}");
  CHECK(kind_of([&] { poly_from_json(F, json::parse("[[1,0,0,0],[0,0,0,0],[0,0,0,0]]")); }) ==
        ErrorKind::ParseError);
}

TEST_CASE("linear set report") {
  auto F = FieldTower::make(2, 1, 4);
  auto L = linear_set_of(LinPoly::trace(F));
  json j = linear_set_to_json(L, true);
  CHECK(j["size"] == 9);
  CHECK(j["rank"] == 4);
  CHECK(j["spectrum"] == json::parse(R"({"1":8,"3":1})"));
  CHECK(j["points"].size() == 9);
  CHECK(j["checks"]["vector_count"] == true);
  CHECK(with_schema("analyze", j)["schema"] == "linset.analyze/1");
}
