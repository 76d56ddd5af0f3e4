#include "linset/codec.hpp"

#include <charconv>

namespace linset {

namespace {

ElementStyle g_style = ElementStyle::Coeffs;

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

uint32_t digits_to_fq(const FieldTower& F, const json& d) {
  if (!d.is_array() || static_cast<int>(d.size()) != F.h()) parse_error("F_q coefficient needs " + std::to_string(F.h()) + " digits");
  uint32_t v = 0, pw = 1;
  for (const auto& x : d) {
    if (!x.is_number_integer()) parse_error("digit must be an integer");
    long long c = x.get<long long>();
    if (c < 0 || c >= F.p()) parse_error("digit out of range: " + std::to_string(c));
    v += static_cast<uint32_t>(c) * pw;
    pw *= static_cast<uint32_t>(F.p());
  }
  return v;
}

}  // namespace

void set_output_style(ElementStyle style) { g_style = style; }
ElementStyle output_style() { return g_style; }

json element_to_json(const FieldTower& F, uint32_t a) {
  if (g_style == ElementStyle::Power) return element_pretty(F, a, ElementStyle::Power);
  json j = json::array();
  for (int i = 0; i < F.n(); ++i) j.push_back(F.fq_digits(F.coord(a, i)));
  return j;
}

uint32_t element_from_json(const FieldTower& F, const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "0") return 0;
    if (s == "1") return 1;
    if (s.rfind("g^", 0) != 0) parse_error("element string must be 0, 1 or g^k: " + s);
    long long k = 0;
    auto [ptr, ec] = std::from_chars(s.data() + 2, s.data() + s.size(), k);
    if (ec != std::errc() || ptr != s.data() + s.size()) parse_error("bad exponent in " + s);
    long long ord = static_cast<long long>(F.size()) - 1;
    return F.exp(static_cast<uint64_t>(((k % ord) + ord) % ord));
  }
  if (!j.is_array() || static_cast<int>(j.size()) != F.n())
    parse_error("element needs " + std::to_string(F.n()) + " coordinates");
  std::vector<uint32_t> c;
  for (const auto& x : j) {
    if (x.is_array()) {
      c.push_back(digits_to_fq(F, x));
    } else if (F.h() == 1 && x.is_number_integer()) {
      c.push_back(digits_to_fq(F, json::array({x})));
    } else {
      parse_error("coordinate must be a digit array");
    }
  }
  return F.from_coords(c);
}

std::string element_pretty(const FieldTower& F, uint32_t a, ElementStyle style) {
  if (style == ElementStyle::Coeffs) {
    json j = json::array();
    for (int i = 0; i < F.n(); ++i) j.push_back(F.fq_digits(F.coord(a, i)));
    return j.dump();
  }
  if (a == 0) return "0";
  if (a == 1) return "1";
  return "g^" + std::to_string(F.log(a));
}

json tower_to_json(const FieldTower& F) {
  return {{"p", F.p()}, {"h", F.h()}, {"n", F.n()}, {"base_modulus", F.base_modulus()},
          {"ext_modulus", F.ext_modulus_digits()}};
}

TowerPtr tower_from_json(const json& j, bool allow_large) {
  if (!j.is_object()) parse_error("tower must be an object");
  try {
    TowerSpec s;
    s.p = j.at("p").get<int>();
    s.h = j.value("h", 1);
    s.n = j.at("n").get<int>();
    if (j.contains("base_modulus")) s.base_modulus = j["base_modulus"].get<std::vector<int>>();
    if (j.contains("ext_modulus")) s.ext_modulus = j["ext_modulus"].get<std::vector<std::vector<int>>>();
    s.allow_large = allow_large;
    return FieldTower::make(s);
  } catch (const json::exception& e) {
    parse_error(std::string("tower: ") + e.what());
  }
}

json poly_to_json(const LinPoly& f) {
  json j = json::array();
  for (uint32_t c : f.coeffs()) j.push_back(element_to_json(*f.tower(), c));
  return j;
}

LinPoly poly_from_json(const TowerPtr& F, const json& j) {
  if (!j.is_array() || j.empty()) parse_error("polynomial must be a non-empty array of elements");
  std::vector<uint32_t> c;
  for (const auto& x : j) c.push_back(element_from_json(*F, x));
  int m = static_cast<int>(c.size());
  if (!F->divides_n(m)) parse_error("polynomial length " + std::to_string(m) + " does not divide n");
  return LinPoly(F, c, m);
}

std::string poly_pretty(const LinPoly& f, ElementStyle style) {
  std::string out;
  const auto& F = *f.tower();
  for (int i = 0; i < f.m(); ++i) {
    uint32_t c = f.coeff(i);
    if (!c) continue;
    if (!out.empty()) out += " + ";
    if (c != 1) out += element_pretty(F, c, style) + "·";
    out += i == 0 ? "x" : i == 1 ? "x^q" : "x^{q^" + std::to_string(i) + "}";
  }
  return out.empty() ? "0" : out;
}

json elements_to_json(const FieldTower& F, const std::vector<uint32_t>& v) {
  json j = json::array();
  for (uint32_t a : v) j.push_back(element_to_json(F, a));
  return j;
}

std::vector<uint32_t> elements_from_json(const FieldTower& F, const json& j) {
  if (!j.is_array()) parse_error("expected an array of elements");
  std::vector<uint32_t> v;
  for (const auto& x : j) v.push_back(element_from_json(F, x));
  return v;
}

json vec2_to_json(const FieldTower& F, Vec2 v) { return json::array({element_to_json(F, v.x), element_to_json(F, v.y)}); }

Vec2 vec2_from_json(const FieldTower& F, const json& j) {
  if (!j.is_array() || j.size() != 2) parse_error("vector must be a pair of elements");
  return {element_from_json(F, j[0]), element_from_json(F, j[1])};
}

json subspace_to_json(const Subspace& U) {
  json rows = json::array();
  for (int r = 0; r < U.dim(); ++r) {
    auto row = U.rref().row(r);
    rows.push_back(std::vector<uint32_t>(row.begin(), row.end()));
  }
  return {{"ambient", U.ambient() == Ambient::Fqn ? "Fqn" : "Fqn2"}, {"rref", rows}};
}

Subspace subspace_from_json(const TowerPtr& F, const json& j) {
  if (!j.is_object() || !j.contains("ambient") || !j.contains("rref")) parse_error("subspace needs ambient and rref");
  std::string a = j["ambient"].get<std::string>();
  if (a != "Fqn" && a != "Fqn2") parse_error("ambient must be Fqn or Fqn2");
  Ambient amb = a == "Fqn" ? Ambient::Fqn : Ambient::Fqn2;
  const int cols = amb == Ambient::Fqn ? F->n() : 2 * F->n();
  const auto& rows = j["rref"];
  if (!rows.is_array()) parse_error("rref must be an array of rows");
  FqMatrix m(static_cast<int>(rows.size()), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != cols) parse_error("rref row has the wrong length");
    for (int c = 0; c < cols; ++c) {
      long long v = rows[r][c].get<long long>();
      if (v < 0 || v >= F->q()) parse_error("rref entry out of range");
      m.at(static_cast<int>(r), c) = static_cast<uint32_t>(v);
    }
  }
  if (m.rows == 0) return Subspace::zero(F, amb);
  return Subspace::from_rows(F, amb, std::move(m));
}

json dual_pair_to_json(const DualPair& dp) {
  const auto& F = *dp.basis.tower();
  return {{"basis", elements_to_json(F, dp.basis.elems())}, {"dual", elements_to_json(F, dp.dual.elems())}};
}

json spectrum_to_json(const Spectrum& s) {
  json j = json::object();
  for (auto [w, c] : s) j[std::to_string(w)] = c;
  return j;
}

Spectrum spectrum_from_json(const json& j) {
  Spectrum s;
  for (auto& [k, v] : j.items()) s[std::stoi(k)] = v.get<uint64_t>();
  return s;
}

json linear_set_to_json(const LinearSet& L, bool with_points) {
  const auto& F = *L.source().tower();
  json j{{"rank", L.rank()},
         {"size", L.size()},
         {"spectrum", spectrum_to_json(L.spectrum_map())},
         {"checks",
          {{"point_count", L.checks().point_count}, {"vector_count", L.checks().vector_count}, {"card_bound", L.checks().card_bound}}}};
  if (with_points) {
    json pts = json::array();
    for (const auto& wp : L.points())
      pts.push_back({{"point", vec2_to_json(F, representative(F, wp.point))}, {"weight", wp.weight}});
    j["points"] = pts;
  }
  return j;
}

json mat2_to_json(const FieldTower& F, const Mat2& m) {
  return json::array({json::array({element_to_json(F, m.a), element_to_json(F, m.b)}),
                      json::array({element_to_json(F, m.c), element_to_json(F, m.d)})});
}

Mat2 mat2_from_json(const FieldTower& F, const json& j) {
  if (!j.is_array() || j.size() != 2 || j[0].size() != 2 || j[1].size() != 2) parse_error("matrix must be 2x2");
  return {element_from_json(F, j[0][0]), element_from_json(F, j[0][1]), element_from_json(F, j[1][0]),
          element_from_json(F, j[1][1])};
}

json map_to_json(const FieldTower& F, const SemilinearMap& m) {
  return {{"matrix", mat2_to_json(F, m.matrix)}, {"rho", m.rho}};
}

json construction_to_json(const Construction& c) {
  const auto& F = *c.space.tower();
  json params = json::object();
  for (auto& [k, v] : c.params) params[k] = element_to_json(F, v);
  json j{{"family", c.family},
         {"params", params},
         {"subspace", subspace_to_json(c.space)},
         {"expected_size", c.expected_size},
         {"expected", spectrum_to_json(c.expected)},
         {"size", c.lset.size()},
         {"spectrum", spectrum_to_json(c.lset.spectrum_map())},
         {"verified", c.verified},
         {"notes", c.notes}};
  if (c.poly) j["poly"] = poly_to_json(*c.poly);
  return j;
}

json with_schema(const std::string& kind, json body) {
  body["schema"] = "linset." + kind + "/1";
  return body;
}

}  // namespace linset
