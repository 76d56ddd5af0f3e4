#pragma once

// Exact arithmetic in the tower F_p < F_q = F_{p^h} < F_{q^n}.
//
// Elements of F_q are packed as integers sum_j c_j p^j (c_j in [0,p)), the
// coefficients of a polynomial in the root of the base modulus.  Elements of
// F_{q^n} are packed as sum_i u_i q^i where u_i is the packed F_q coefficient
// of the i-th power of the root of the extension modulus.  So the base-q
// digits of an element index are its coordinates over F_q in the power basis,
// and F_q embeds into F_{q^n} as the indices [0, q).

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linset/error.hpp"

namespace linset {

class FieldTower;

// Dense matrix over F_q; entries are packed F_q indices.
struct FqMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<uint32_t> a;

  FqMatrix() = default;
  FqMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  uint32_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  uint32_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
  std::span<uint32_t> row(int r) { return {a.data() + static_cast<size_t>(r) * cols, static_cast<size_t>(cols)}; }
  std::span<const uint32_t> row(int r) const {
    return {a.data() + static_cast<size_t>(r) * cols, static_cast<size_t>(cols)};
  }
  bool operator==(const FqMatrix&) const = default;
};

// Result of reducing a matrix to reduced row-echelon form in place.
struct RrefInfo {
  int rank = 0;
  std::vector<int> pivots;
};

// Element handle: a packed index plus the tower it lives in.  The tower must
// outlive every handle into it; library containers keep it alive through a
// shared_ptr.  A default-constructed handle is the zero of no particular tower
// and adopts the tower of the other operand in binary operations.
class Fe {
 public:
  Fe() = default;
  Fe(const FieldTower* tower, uint32_t index) : tower_(tower), v_(index) {}

  uint32_t index() const noexcept { return v_; }
  const FieldTower* tower() const noexcept { return tower_; }
  bool is_zero() const noexcept { return v_ == 0; }
  bool is_one() const noexcept { return v_ == 1; }

  Fe inv() const;
  Fe pow(int64_t e) const;
  Fe frob(int i) const;  // x^{q^i}
  Fe aut(int e) const;   // x^{p^e}

  friend Fe operator+(Fe a, Fe b);
  friend Fe operator-(Fe a, Fe b);
  friend Fe operator*(Fe a, Fe b);
  friend Fe operator/(Fe a, Fe b);
  friend Fe operator-(Fe a);
  Fe& operator+=(Fe b) { return *this = *this + b; }
  Fe& operator-=(Fe b) { return *this = *this - b; }
  Fe& operator*=(Fe b) { return *this = *this * b; }

  friend bool operator==(Fe a, Fe b) noexcept { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(Fe a, Fe b) noexcept { return a.v_ <=> b.v_; }

 private:
  const FieldTower* tower_ = nullptr;
  uint32_t v_ = 0;
};

struct TowerSpec {
  int p = 2;
  int h = 1;
  int n = 2;
  // Little-endian integer coefficients, leading 1 included (length h+1).
  std::optional<std::vector<int>> base_modulus;
  // Little-endian F_q coefficients (each a length-h integer list), leading
  // coefficient included (length n+1).
  std::optional<std::vector<std::vector<int>>> ext_modulus;
  bool allow_large = false;
};

inline constexpr uint64_t kDeskScaleLimit = uint64_t{1} << 24;

class FieldTower {
 public:
  static std::shared_ptr<const FieldTower> make(const TowerSpec& spec);
  static std::shared_ptr<const FieldTower> make(int p, int h, int n);

  int p() const noexcept { return p_; }
  int h() const noexcept { return h_; }
  int n() const noexcept { return n_; }
  uint32_t q() const noexcept { return q_; }
  uint32_t size() const noexcept { return size_; }
  // Order of Aut(F_{q^n}) = h*n.
  int aut_order() const noexcept { return h_ * n_; }

  const std::vector<int>& base_modulus() const noexcept { return base_mod_; }
  // Packed F_q coefficients of the extension modulus, leading 1 included.
  const std::vector<uint32_t>& ext_modulus() const noexcept { return ext_mod_; }
  std::vector<std::vector<int>> ext_modulus_digits() const;

  // ---- F_q ----
  uint32_t fq_add(uint32_t a, uint32_t b) const;
  uint32_t fq_sub(uint32_t a, uint32_t b) const;
  uint32_t fq_neg(uint32_t a) const;
  uint32_t fq_mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    uint32_t s = fq_log_[a] + fq_log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return fq_exp_[s];
  }
  uint32_t fq_inv(uint32_t a) const;
  // Image of an integer under Z -> F_p -> F_q.
  uint32_t fq_from_int(long long v) const;
  std::vector<int> fq_digits(uint32_t a) const;

  // ---- F_{q^n} (packed indices) ----
  uint32_t add(uint32_t a, uint32_t b) const {
    if (p_ == 2) return a ^ b;
    return add_digits(a, b, false);
  }
  uint32_t sub(uint32_t a, uint32_t b) const {
    if (p_ == 2) return a ^ b;
    return add_digits(a, b, true);
  }
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    uint64_t s = uint64_t{log_[a]} + log_[b];
    if (s >= size_ - 1) s -= size_ - 1;
    return exp_[s];
  }
  uint32_t inv(uint32_t a) const;
  uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }
  uint32_t pow(uint32_t a, int64_t e) const;
  uint32_t frob(uint32_t a, int i) const;  // a^{q^i}, i taken mod n
  uint32_t aut(uint32_t a, int e) const;   // a^{p^e}, e taken mod h*n
  // Schoolbook multiplication through the moduli; used to build the tables
  // and kept as an independent reference.
  uint32_t mul_reference(uint32_t a, uint32_t b) const;

  uint32_t generator() const noexcept { return gen_; }
  uint32_t log(uint32_t a) const;
  uint32_t exp(uint64_t k) const { return exp_[k % (size_ - 1)]; }

  uint32_t coord(uint32_t a, int i) const { return (a / qpow_[i]) % q_; }
  uint32_t from_coords(std::span<const uint32_t> c) const;
  void to_coords(uint32_t a, std::span<uint32_t> out) const;

  // ---- structure ----
  std::vector<int> divisors_of_n() const;
  bool divides_n(int t) const noexcept { return t >= 1 && n_ % t == 0; }
  uint32_t trace(uint32_t a, int t) const;  // Tr_{q^n/q^t}
  uint32_t norm(uint32_t a, int t) const;   // N_{q^n/q^t}
  bool in_subfield(uint32_t a, int t) const;
  // RREF F_q-basis of the fixed space of x -> x^{q^t}.
  const std::vector<uint32_t>& subfield_basis(int t) const;
  // Sorted elements of F_{q^t}.
  const std::vector<uint32_t>& subfield_elements(int t) const;
  // Monic minimal polynomial over F_q, packed F_q coefficients, leading 1 last.
  std::vector<uint32_t> min_poly(uint32_t a) const;
  // Matrix over F_q of x -> x^{q^i} in the power basis (columns are images).
  const FqMatrix& frobenius_matrix(int i) const { return frob_mat_[((i % n_) + n_) % n_]; }

  Fe elem(uint32_t index) const { return Fe(this, index); }
  Fe zero() const { return Fe(this, 0); }
  Fe one() const { return Fe(this, 1); }
  Fe gen() const { return Fe(this, gen_); }
  Fe from_int(long long v) const { return Fe(this, fq_from_int(v)); }
  std::vector<Fe> all_elements() const;

  // Linear algebra over F_q.
  RrefInfo rref(FqMatrix& m) const;
  FqMatrix nullspace(const FqMatrix& m) const;  // rows span {x : m x = 0}
  int rank(FqMatrix m) const { return rref(m).rank; }

  bool same_as(const FieldTower& o) const {
    return p_ == o.p_ && h_ == o.h_ && n_ == o.n_ && base_mod_ == o.base_mod_ && ext_mod_ == o.ext_mod_;
  }

  FieldTower(const FieldTower&) = delete;
  FieldTower& operator=(const FieldTower&) = delete;

 private:
  FieldTower() = default;
  void build(const TowerSpec& spec);
  uint32_t add_digits(uint32_t a, uint32_t b, bool subtract) const;
  uint32_t fq_mul_reference(uint32_t a, uint32_t b) const;

  int p_ = 0, h_ = 0, n_ = 0;
  uint32_t q_ = 0, size_ = 0;
  std::vector<int> base_mod_;
  std::vector<uint32_t> ext_mod_;
  std::vector<uint32_t> fq_log_, fq_exp_;
  std::vector<uint32_t> fq_add_;           // q*q table
  std::vector<uint32_t> log_, exp_;
  uint32_t gen_ = 0;
  std::vector<uint32_t> qpow_;             // q^i, i <= n
  std::vector<uint32_t> ppow_;             // p^j, j <= h*n
  std::vector<uint64_t> qpow_mod_;         // q^i mod (q^n - 1)
  std::vector<uint64_t> ppow_mod_;         // p^e mod (q^n - 1)
  std::vector<FqMatrix> frob_mat_;
  std::map<int, std::vector<uint32_t>> sub_basis_;
  std::map<int, std::vector<uint32_t>> sub_elems_;
};

using TowerPtr = std::shared_ptr<const FieldTower>;

// Factors of degree <= deg/2 are tried in canonical order; returns the first
// monic divisor found (packed F_q coefficients) or nothing if irreducible.
std::optional<std::vector<uint32_t>> find_factor_over_fq(const FieldTower& F, const std::vector<uint32_t>& poly);

bool is_prime(long long v);
// q = p^h decomposition; nothing if q is not a prime power.
std::optional<std::pair<int, int>> prime_power(long long q);

}  // namespace linset
