#pragma once

// Explicit constructions: product subspaces, projection polynomials, the
// two-weight families, minimum-size polynomials and the PG(1,q^4) catalog.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linset/bases.hpp"
#include "linset/linpoly.hpp"
#include "linset/linset.hpp"

namespace linset {

using Spectrum = std::map<int, uint64_t>;  // weight -> number of points

// 2x2 matrix over F_{q^n} acting on column vectors: (x, y) -> (a x + b y, c x + d y).
struct Mat2 {
  uint32_t a = 1, b = 0, c = 0, d = 1;
  friend bool operator==(const Mat2&, const Mat2&) = default;
  friend auto operator<=>(const Mat2&, const Mat2&) = default;
};
Vec2 apply(const FieldTower& F, const Mat2& m, Vec2 v);
Subspace apply(const Mat2& m, const Subspace& U);
uint32_t det(const FieldTower& F, const Mat2& m);
Mat2 mul(const FieldTower& F, const Mat2& x, const Mat2& y);

// A built object together with its expected spectrum.
struct Construction {
  std::string family;
  Subspace space;
  std::optional<LinPoly> poly;
  LinearSet lset;
  uint64_t expected_size = 0;
  Spectrum expected;
  bool verified = false;
  std::vector<std::pair<std::string, uint32_t>> params;
  std::vector<std::string> notes;
};

// Computes the linear set of `U` and compares it with the expectation;
// throws VerificationFailed on mismatch.
Construction certify(std::string family, Subspace U, std::optional<LinPoly> poly, Spectrum expected);

// ---- products and projections ----

Subspace product_space(const Subspace& T, const Subspace& S);

// p with kernel T and image S, p|_S = id.  Throws NotDirectSum.
LinPoly projection_poly(const Subspace& T, const Subspace& S);
// sum_{i >= t} b_i Tr(b_i^* x) for an ordered basis b and its dual.
LinPoly projection_poly(const DualPair& dp, int t);

struct GraphCertificate {
  LinPoly p;
  Mat2 phi;  // (1 1; 0 1)
  bool graph_match = false;
  bool spectra_match = false;
  Spectrum spectrum_U, spectrum_p;
};
GraphCertificate graph_certificate(const Subspace& T, const Subspace& S);

// ---- two-weight families, n = 2t ----

// S_{f,xi} = {u + xi f(u) : u in F_{q^t}}.
struct GraphSpace {
  LinPoly f;  // over F_{q^t}
  uint32_t xi = 0;
  Subspace space;
};
GraphSpace subfield_graph(const LinPoly& f, uint32_t xi);

// xi^2 = a xi + b with a = xi + xi^{q^t}, b = -xi^{q^t+1}.
struct XiData {
  uint32_t a = 0, b = 0;
};
XiData xi_data(const FieldTower& F, uint32_t xi);
// eta = A xi + B with A, B in F_{q^t}.
struct EtaData {
  uint32_t A = 0, B = 0;
};
EtaData eta_data(const FieldTower& F, uint32_t xi, uint32_t eta);

// First element outside F_{q^t}, in index order.
uint32_t first_outside_subfield(const FieldTower& F, int t);

Construction ex1_space(const LinPoly& f, uint32_t mu, uint32_t eta, uint32_t xi);
// F_{q^t} x S_{f,xi}, the mu = 0 form reached by diag(delta^{-1}, 1), delta = 1 + mu eta.
struct Ex1Reduction {
  Subspace reduced;
  Mat2 map;
  bool maps_exactly = false;
};
Ex1Reduction ex1_reduction(const LinPoly& f, uint32_t mu, uint32_t eta, uint32_t xi);

Construction ex2_space(const TowerPtr& F, int s, uint32_t mu, uint32_t xi);
// gcd(s, t) = 1, mu in F_{q^t}, xi outside it, and both norm conditions.
void check_ex2_params(const FieldTower& F, int s, uint32_t mu, uint32_t xi);
// First mu in F_{q^t} (index order) meeting both norm conditions; NoParameterFound otherwise.
uint32_t find_ex2_mu(const TowerPtr& F, int s, uint32_t xi);
// First xi outside F_{q^t} admitting such a mu, with that mu.
struct Ex2Params {
  uint32_t xi = 0, mu = 0;
};
Ex2Params find_ex2_params(const TowerPtr& F, int s);

struct RelationResult {
  bool holds = true;
  int max_solutions_log = 0;  // largest dim of a solution space
  std::optional<std::pair<uint32_t, uint32_t>> witness;  // (alpha_0, alpha_1)
};
RelationResult relation_check(const LinPoly& f, const LinPoly& g, uint32_t xi, uint32_t eta);

struct TwoWeightConditions {
  int t = 0, s = 0;
  uint64_t predicted_size = 0, observed_size = 0;
  bool size_ok = false;           // i
  bool others_weight_one = false;  // ii
  bool ratio_ok = false;          // iii
  bool scaled_ok = false;         // iv
  bool all_agree() const { return size_ok == others_weight_one && size_ok == ratio_ok && size_ok == scaled_ok; }
  bool all() const { return size_ok && others_weight_one && ratio_ok && scaled_ok; }
};
// U = T x S with dim T >= dim S.
TwoWeightConditions two_weight_conditions(const Subspace& T, const Subspace& S);
uint64_t two_weight_size(uint64_t q, int k, int t, int s);

LinPoly pol2w(const LinPoly& f, uint32_t xi);
// The closed form displayed for B22 (t = 2), with xibar in the role of epsilon.
LinPoly b22_display(const TowerPtr& F, uint32_t A0, uint32_t A1, uint32_t xibar);

struct Ex2Poly {
  DualPair basis;
  LinPoly p;        // coefficients from the S-part duals (lambda_{t+l}^*)
  LinPoly literal;  // coefficients from lambda_l^* exactly as displayed
};
Ex2Poly ex2_poly(const TowerPtr& F, int s, uint32_t mu, uint32_t xi,
               std::optional<std::vector<uint32_t>> u_basis = {});

// ---- minimum size ----

LinPoly minsize_poly(const TowerPtr& F, uint32_t lambda, int t);
LinPoly minsize_binomial(const TowerPtr& F, uint32_t lambda, int t, uint32_t d);
LinPoly minsize_trinomial(const TowerPtr& F, uint32_t lambda, int t, uint32_t c, int k);
// Closed-form coefficients displayed for C12, n = 4, t = 2.
LinPoly c12_display(const TowerPtr& F, uint32_t lambda);

Spectrum jvdv_expected(uint64_t q, int t1, int t2);
Construction jvdv_space(const TowerPtr& F, uint32_t lambda, int t1, int t2);
// (1 lambda^t; 0 lambda^t)
Mat2 jvdv_shear(const FieldTower& F, uint32_t lambda, int t);
// First element whose minimal polynomial has degree n.
uint32_t first_full_degree(const FieldTower& F);

// ---- PG(1, q^4) ----

enum class CatalogFamily { Baer, ScatteredLP, ClubTrace, C12, Pseudoreg, C15, B22, C13 };
const std::vector<CatalogFamily>& catalog_families();
const char* catalog_name(CatalogFamily f);
std::optional<CatalogFamily> catalog_from_name(const std::string& s);
// F must have n = 4.
Construction pg1q4_catalog(const TowerPtr& F, CatalogFamily family);

// ---- scattered polynomials over F_{q^n} ----

struct Table1Row {
  std::string name;
  std::string t;
  std::string poly;
  std::string conditions;
  bool default_on;
  bool constructible;
};
const std::vector<Table1Row>& table1_rows();
// Instance of the named row over the whole tower; rows that are not on by
// default need opt_in.
LinPoly table1_instance(const TowerPtr& F, const std::string& name, int s = 1, bool opt_in = false);

}  // namespace linset
