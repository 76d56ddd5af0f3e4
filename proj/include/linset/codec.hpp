#pragma once

// JSON encodings.  An element of F_{q^n} is [[c_00, ..], .., [c_(n-1)0, ..]]:
// the F_q coordinates in the power basis, each as its little-endian F_p digits.

#include <json.hpp>
#include <string>

#include "linset/bases.hpp"
#include "linset/construct.hpp"
#include "linset/equiv.hpp"
#include "linset/linset.hpp"

namespace linset {

using nlohmann::json;

enum class ElementStyle { Coeffs, Power };

// Encoding used by element_to_json: nested arrays (default) or "g^k".
void set_output_style(ElementStyle style);
ElementStyle output_style();

json element_to_json(const FieldTower& F, uint32_t a);
// Accepts the nested array, a flat array when h = 1, or "0", "1", "g^k".
uint32_t element_from_json(const FieldTower& F, const json& j);
std::string element_pretty(const FieldTower& F, uint32_t a, ElementStyle style);

json tower_to_json(const FieldTower& F);
TowerPtr tower_from_json(const json& j, bool allow_large = false);

// Array of coefficients indexed by q-exponent; its length is m.
json poly_to_json(const LinPoly& f);
LinPoly poly_from_json(const TowerPtr& F, const json& j);
std::string poly_pretty(const LinPoly& f, ElementStyle style);

json elements_to_json(const FieldTower& F, const std::vector<uint32_t>& v);
std::vector<uint32_t> elements_from_json(const FieldTower& F, const json& j);
json vec2_to_json(const FieldTower& F, Vec2 v);
Vec2 vec2_from_json(const FieldTower& F, const json& j);

json subspace_to_json(const Subspace& U);
Subspace subspace_from_json(const TowerPtr& F, const json& j);

json dual_pair_to_json(const DualPair& dp);

json spectrum_to_json(const Spectrum& s);
Spectrum spectrum_from_json(const json& j);

// {rank, size, spectrum, points?, checks}
json linear_set_to_json(const LinearSet& L, bool with_points);

json mat2_to_json(const FieldTower& F, const Mat2& m);
Mat2 mat2_from_json(const FieldTower& F, const json& j);
json map_to_json(const FieldTower& F, const SemilinearMap& m);

json construction_to_json(const Construction& c);

// Prefixes the schema tag: {"schema": "linset.<kind>/1", ...}.
json with_schema(const std::string& kind, json body);

}  // namespace linset
