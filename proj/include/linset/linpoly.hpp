#pragma once

// q-polynomials sum_{i<m} a_i x^{q^i} over a subfield F_{q^m} of F_{q^n}
// (m | n, default m = n), reduced mod x^{q^m} - x.

#include <optional>
#include <vector>

#include "linset/exec.hpp"
#include "linset/subspace.hpp"

namespace linset {

class LinPoly {
 public:
  LinPoly() = default;
  // Coefficients must lie in F_{q^m}; a shorter list is padded with zeros.
  LinPoly(TowerPtr F, std::vector<uint32_t> coeffs, int m = 0);

  static LinPoly zero(TowerPtr F, int m = 0);
  static LinPoly identity(TowerPtr F, int m = 0);
  static LinPoly monomial(TowerPtr F, int i, uint32_t coeff = 1, int m = 0);
  // Tr_{q^m/q}.
  static LinPoly trace(TowerPtr F, int m = 0);
  // sum_j b_j x^{sigma^j} with sigma = x^{q^s}; requires gcd(s, m) = 1.
  static LinPoly from_sigma(TowerPtr F, const std::vector<uint32_t>& b, int s, int m = 0);

  const TowerPtr& tower() const noexcept { return F_; }
  int m() const noexcept { return m_; }
  uint32_t coeff(int i) const { return c_[((i % m_) + m_) % m_]; }
  const std::vector<uint32_t>& coeffs() const noexcept { return c_; }
  bool is_zero() const;
  // Largest i with a_i != 0, or -1.
  int q_degree() const;
  // Coefficient of x^{sigma^j}, sigma = x^{q^s}.
  uint32_t sigma_coeff(int j, int s) const { return coeff(j * s); }
  int sigma_degree(int s) const;

  uint32_t eval(uint32_t a) const;

  LinPoly compose(const LinPoly& g) const;  // this(g(x))
  LinPoly operator+(const LinPoly& g) const;
  LinPoly operator-(const LinPoly& g) const;
  LinPoly scaled(uint32_t c) const;  // c * f(x)
  LinPoly adjoint() const;

  // m x m matrix over F_q in the RREF basis of F_{q^m} (column j = f(b_j)).
  FqMatrix matrix() const;
  Subspace kernel_space() const;
  Subspace image_space() const;

  friend bool operator==(const LinPoly& a, const LinPoly& b) { return a.m_ == b.m_ && a.c_ == b.c_; }

 private:
  TowerPtr F_;
  int m_ = 0;
  std::vector<uint32_t> c_;
};

// Coordinates of an element of F_{q^m} in the RREF basis of that subfield.
std::vector<uint32_t> subfield_coords(const FieldTower& F, int m, uint32_t a);

struct ScatterResult {
  bool scattered = true;
  // Smallest element index m with dim ker(f(x) - m x) >= 2.
  std::optional<uint32_t> witness;
  int witness_dim = 0;
};
ScatterResult is_scattered(const LinPoly& f, Exec ex = Exec::Parallel);

// |{f(x)/x : x in F_{q^m}^*}|.
uint64_t ratio_image_size(const LinPoly& f, Exec ex = Exec::Parallel);

// Gow's bound for a sigma-polynomial: dim ker <= k and, at equality,
// N(a_0) = (-1)^{mk} N(a_k), norms taken from F_{q^m} to F_q.
struct GowCheck {
  int k = -1;
  int kernel_dim = 0;
  bool bound_ok = true;
  bool equality = false;
  bool norm_ok = true;
};
GowCheck gow_check(const LinPoly& f, int s);

// N_{q^m/q}(a) for a in F_{q^m}.
uint32_t subfield_norm(const FieldTower& F, int m, uint32_t a);
uint32_t subfield_trace(const FieldTower& F, int m, uint32_t a);

}  // namespace linset
