#include "linset/bases.hpp"

#include <algorithm>

namespace linset {

uint32_t determinant(const FieldTower& F, FqnMatrix m) {
  const int n = static_cast<int>(m.size());
  uint32_t det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (m[r][c]) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = F.neg(det);
    }
    det = F.mul(det, m[c][c]);
    uint32_t inv = F.inv(m[c][c]);
    for (int r = c + 1; r < n; ++r) {
      if (!m[r][c]) continue;
      uint32_t f = F.mul(m[r][c], inv);
      for (int j = c; j < n; ++j) m[r][j] = F.sub(m[r][j], F.mul(f, m[c][j]));
    }
  }
  return det;
}

FqnMatrix moore_matrix(const FieldTower& F, const std::vector<uint32_t>& elems) {
  const int n = static_cast<int>(elems.size());
  FqnMatrix V(n, std::vector<uint32_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) V[i][j] = F.frob(elems[j], i);
  return V;
}

bool is_independent(const FieldTower& F, const std::vector<uint32_t>& elems) {
  FqMatrix m(static_cast<int>(elems.size()), F.n());
  for (size_t r = 0; r < elems.size(); ++r) F.to_coords(elems[r], m.row(static_cast<int>(r)));
  return F.rank(std::move(m)) == static_cast<int>(elems.size());
}

OrderedBasis::OrderedBasis(TowerPtr F, std::vector<uint32_t> elems) : F_(std::move(F)), e_(std::move(elems)) {
  if (static_cast<int>(e_.size()) != F_->n()) throw Error(ErrorKind::SingularMoore, "a basis needs n elements");
  if (determinant(*F_, moore_matrix(*F_, e_)) == 0) throw Error(ErrorKind::SingularMoore, "elements are dependent");
}

OrderedBasis OrderedBasis::power(TowerPtr F, uint32_t lambda) {
  std::vector<uint32_t> e;
  uint32_t x = 1;
  for (int i = 0; i < F->n(); ++i) {
    e.push_back(x);
    x = F->mul(x, lambda);
  }
  if (!is_independent(*F, e))
    throw Error(ErrorKind::NotPrimitivePolynomialBasis, "powers of lambda do not form a basis");
  return OrderedBasis(std::move(F), std::move(e));
}

bool is_dual(const OrderedBasis& b, const std::vector<uint32_t>& d) {
  const auto& F = *b.tower();
  if (d.size() != b.size()) return false;
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t j = 0; j < d.size(); ++j)
      if (F.trace(F.mul(b[i], d[j]), 1) != (i == j ? 1u : 0u)) return false;
  return true;
}

namespace {

DualPair checked(const OrderedBasis& B, std::vector<uint32_t> d, const char* method) {
  if (!is_dual(B, d)) throw Error(ErrorKind::VerificationFailed, std::string(method) + ": dual basis check failed");
  return {B, OrderedBasis(B.tower(), std::move(d))};
}

std::vector<uint32_t> powers(const FieldTower& F, uint32_t lambda, int count) {
  std::vector<uint32_t> p(count);
  uint32_t x = 1;
  for (int i = 0; i < count; ++i) {
    p[i] = x;
    x = F.mul(x, lambda);
  }
  return p;
}

}  // namespace

DualPair dual_basis_cofactor(const OrderedBasis& B) {
  const auto& F = *B.tower();
  const int n = F.n();
  FqnMatrix V = moore_matrix(F, B.elems());
  uint32_t det = determinant(F, V);
  if (!det) throw Error(ErrorKind::SingularMoore, "Moore matrix is singular");
  uint32_t dinv = F.inv(det);
  std::vector<uint32_t> d(n);
  for (int i = 0; i < n; ++i) {
    FqnMatrix minor;
    for (int r = 1; r < n; ++r) {
      std::vector<uint32_t> row;
      for (int c = 0; c < n; ++c)
        if (c != i) row.push_back(V[r][c]);
      minor.push_back(std::move(row));
    }
    uint32_t cof = determinant(F, std::move(minor));
    if (i % 2) cof = F.neg(cof);
    d[i] = F.mul(cof, dinv);
  }
  return checked(B, std::move(d), "cofactor");
}

DualPair dual_basis_polybasis(const TowerPtr& F, uint32_t lambda) {
  const int n = F->n();
  auto a = F->min_poly(lambda);
  if (static_cast<int>(a.size()) != n + 1)
    throw Error(ErrorKind::NotPrimitivePolynomialBasis, "minimal polynomial has degree < n");
  OrderedBasis B = OrderedBasis::power(F, lambda);
  auto lp = powers(*F, lambda, n + 1);
  // delta = f'(lambda)
  uint32_t delta = 0;
  for (int i = 1; i <= n; ++i) delta = F->add(delta, F->mul(F->mul(F->fq_from_int(i), a[i]), lp[i - 1]));
  uint32_t dinv = F->inv(delta);
  std::vector<uint32_t> d(n);
  for (int i = 0; i < n; ++i) {
    uint32_t g = 0;
    for (int j = 1; j <= n - i; ++j) g = F->add(g, F->mul(lp[j - 1], a[i + j]));
    d[i] = F->mul(dinv, g);
  }
  return checked(B, std::move(d), "polynomial basis");
}

DualPair dual_basis_binomial(const TowerPtr& F, uint32_t lambda, uint32_t d) {
  const int n = F->n();
  std::vector<uint32_t> expect(n + 1, 0);
  expect[0] = F->neg(d);
  expect[n] = 1;
  if (F->min_poly(lambda) != expect) throw Error(ErrorKind::MinPolyMismatch, "minimal polynomial is not x^n - d");
  OrderedBasis B = OrderedBasis::power(F, lambda);
  auto lp = powers(*F, lambda, n + 1);
  uint32_t nd_inv = F->inv(F->mul(F->fq_from_int(n), d));
  std::vector<uint32_t> dual(n);
  for (int i = 0; i < n; ++i) dual[i] = F->mul(lp[n - i], nd_inv);
  return checked(B, std::move(dual), "binomial");
}

DualPair dual_basis_trinomial(const TowerPtr& F, uint32_t lambda, uint32_t c, int k) {
  const int n = F->n();
  if (k < 1 || k >= n) throw Error(ErrorKind::InvalidArgument, "trinomial needs 1 <= k < n");
  std::vector<uint32_t> expect(n + 1, 0);
  expect[0] = F->neg(1);
  expect[k] = F->neg(c);
  expect[n] = 1;
  if (F->min_poly(lambda) != expect)
    throw Error(ErrorKind::MinPolyMismatch, "minimal polynomial is not x^n - c x^k - 1");
  OrderedBasis B = OrderedBasis::power(F, lambda);
  auto lp = powers(*F, lambda, n + 1);
  uint32_t num = F->sub(F->mul(F->fq_from_int(n), lp[n - 1]), F->mul(F->mul(c, F->fq_from_int(k)), lp[k - 1]));
  uint32_t den = F->sub(lp[n - k], c);
  uint32_t delta_inv = F->div(den, num);
  std::vector<uint32_t> dual(n);
  for (int i = 0; i < n; ++i) dual[i] = F->mul(delta_inv, i < k ? lp[k - 1 - i] : lp[n + k - 1 - i]);
  return checked(B, std::move(dual), "trinomial");
}

std::optional<WeakSelfDuality> weakly_self_dual(const DualPair& dp) {
  const auto& F = *dp.basis.tower();
  const auto& b = dp.basis.elems();
  const auto& d = dp.dual.elems();
  const int n = static_cast<int>(b.size());
  // delta must be d_0 / b_j for some j.
  for (int j0 = 0; j0 < n; ++j0) {
    uint32_t delta = F.div(d[0], b[j0]);
    std::vector<int> perm(n, -1);
    std::vector<bool> used(n, false);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      uint32_t target = F.div(d[i], delta);
      auto it = std::find(b.begin(), b.end(), target);
      if (it == b.end() || used[it - b.begin()]) {
        ok = false;
        break;
      }
      perm[i] = static_cast<int>(it - b.begin());
      used[perm[i]] = true;
    }
    if (ok) return WeakSelfDuality{delta, perm};
  }
  return std::nullopt;
}

}  // namespace linset
