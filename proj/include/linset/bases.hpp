#pragma once

// Ordered F_q-bases of F_{q^n} and their trace-dual bases.

#include <optional>
#include <vector>

#include "linset/gf.hpp"

namespace linset {

using FqnMatrix = std::vector<std::vector<uint32_t>>;

uint32_t determinant(const FieldTower& F, FqnMatrix m);

class OrderedBasis {
 public:
  OrderedBasis() = default;
  // Throws SingularMoore unless the elements are F_q-independent and n in number.
  OrderedBasis(TowerPtr F, std::vector<uint32_t> elems);
  static OrderedBasis power(TowerPtr F, uint32_t lambda);

  const TowerPtr& tower() const noexcept { return F_; }
  const std::vector<uint32_t>& elems() const noexcept { return e_; }
  uint32_t operator[](size_t i) const { return e_[i]; }
  size_t size() const noexcept { return e_.size(); }
  friend bool operator==(const OrderedBasis& a, const OrderedBasis& b) { return a.e_ == b.e_; }

 private:
  TowerPtr F_;
  std::vector<uint32_t> e_;
};

// Entry (i, j) = xi_j^{q^i}.
FqnMatrix moore_matrix(const FieldTower& F, const std::vector<uint32_t>& elems);
bool is_independent(const FieldTower& F, const std::vector<uint32_t>& elems);

struct DualPair {
  OrderedBasis basis;
  OrderedBasis dual;
};

// Tr(b_i d_j) = delta_ij for all i, j.
bool is_dual(const OrderedBasis& b, const std::vector<uint32_t>& d);

DualPair dual_basis_cofactor(const OrderedBasis& B);
DualPair dual_basis_polybasis(const TowerPtr& F, uint32_t lambda);
// lambda with minimal polynomial x^n - d.
DualPair dual_basis_binomial(const TowerPtr& F, uint32_t lambda, uint32_t d);
// lambda with minimal polynomial x^n - c x^k - 1, 1 <= k < n.
DualPair dual_basis_trinomial(const TowerPtr& F, uint32_t lambda, uint32_t c, int k);

// b_i^* = delta * b_{pi(i)}, if such a scalar and permutation exist.
struct WeakSelfDuality {
  uint32_t delta = 0;
  std::vector<int> perm;
};
std::optional<WeakSelfDuality> weakly_self_dual(const DualPair& dp);

}  // namespace linset
