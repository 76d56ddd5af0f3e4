#include "linset/subspace.hpp"

#include <algorithm>

namespace linset {

ElementSet::ElementSet(std::vector<uint32_t> v) : v_(std::move(v)) {
  std::sort(v_.begin(), v_.end());
  v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
}

bool ElementSet::contains(uint32_t a) const { return std::binary_search(v_.begin(), v_.end(), a); }

ElementSet ElementSet::intersect(const ElementSet& o) const {
  std::vector<uint32_t> out;
  std::set_intersection(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(), std::back_inserter(out));
  ElementSet r;
  r.v_ = std::move(out);
  return r;
}

namespace {

int amb_dim(const FieldTower& F, Ambient amb) { return amb == Ambient::Fqn ? F.n() : 2 * F.n(); }

void require_same(const Subspace& U, const Subspace& W) {
  if (U.ambient() != W.ambient()) throw Error(ErrorKind::AmbientMismatch, "subspaces live in different ambients");
  if (U.tower().get() != W.tower().get() && !U.tower()->same_as(*W.tower()))
    throw Error(ErrorKind::TowerMismatch, "subspaces over different towers");
}

}  // namespace

Subspace Subspace::zero(TowerPtr F, Ambient amb) {
  Subspace s;
  s.amb_ = amb;
  s.rref_ = FqMatrix(0, amb_dim(*F, amb));
  s.F_ = std::move(F);
  return s;
}

Subspace Subspace::full(TowerPtr F, Ambient amb) {
  int d = amb_dim(*F, amb);
  FqMatrix m(d, d);
  for (int i = 0; i < d; ++i) m.at(i, i) = 1;
  return from_rows(std::move(F), amb, std::move(m));
}

Subspace Subspace::from_rows(TowerPtr F, Ambient amb, FqMatrix rows) {
  if (rows.cols != amb_dim(*F, amb)) throw Error(ErrorKind::AmbientMismatch, "row length does not match ambient");
  Subspace s;
  s.amb_ = amb;
  RrefInfo info = F->rref(rows);
  FqMatrix m(info.rank, rows.cols);
  std::copy(rows.a.begin(), rows.a.begin() + static_cast<long>(info.rank) * rows.cols, m.a.begin());
  s.rref_ = std::move(m);
  s.pivots_ = std::move(info.pivots);
  s.F_ = std::move(F);
  return s;
}

Subspace Subspace::span(TowerPtr F, const std::vector<uint32_t>& elems) {
  const int n = F->n();
  FqMatrix m(static_cast<int>(elems.size()), n);
  for (size_t r = 0; r < elems.size(); ++r) {
    if (elems[r] >= F->size()) throw Error(ErrorKind::AmbientMismatch, "element out of range");
    F->to_coords(elems[r], m.row(static_cast<int>(r)));
  }
  return from_rows(std::move(F), Ambient::Fqn, std::move(m));
}

Subspace Subspace::span(TowerPtr F, const std::vector<Vec2>& vecs) {
  const int n = F->n();
  FqMatrix m(static_cast<int>(vecs.size()), 2 * n);
  for (size_t r = 0; r < vecs.size(); ++r) {
    auto row = m.row(static_cast<int>(r));
    F->to_coords(vecs[r].x, row.subspan(0, n));
    F->to_coords(vecs[r].y, row.subspan(n, n));
  }
  return from_rows(std::move(F), Ambient::Fqn2, std::move(m));
}

std::vector<uint32_t> Subspace::basis_elems() const {
  if (amb_ != Ambient::Fqn) throw Error(ErrorKind::AmbientMismatch, "expected a subspace of F_{q^n}");
  std::vector<uint32_t> out;
  for (int r = 0; r < dim(); ++r) out.push_back(F_->from_coords(rref_.row(r)));
  return out;
}

std::vector<Vec2> Subspace::basis_vecs() const {
  if (amb_ != Ambient::Fqn2) throw Error(ErrorKind::AmbientMismatch, "expected a subspace of F_{q^n}^2");
  const int n = F_->n();
  std::vector<Vec2> out;
  for (int r = 0; r < dim(); ++r) {
    auto row = rref_.row(r);
    out.push_back({F_->from_coords(row.subspan(0, n)), F_->from_coords(row.subspan(n, n))});
  }
  return out;
}

std::vector<uint32_t> Subspace::member_elems() const {
  std::vector<uint32_t> out{0};
  for (uint32_t b : basis_elems()) {
    std::vector<uint32_t> next;
    next.reserve(out.size() * F_->q());
    for (uint32_t c = 0; c < F_->q(); ++c) {
      uint32_t cb = F_->mul(c, b);
      for (uint32_t e : out) next.push_back(F_->add(e, cb));
    }
    out.swap(next);
  }
  return out;
}

std::vector<Vec2> Subspace::member_vecs() const {
  std::vector<Vec2> out{{0, 0}};
  auto basis = basis_vecs();
  for (int j = dim() - 1; j >= 0; --j) {
    // Building from the last basis vector outward leaves the first one fastest.
    std::vector<Vec2> next;
    next.reserve(out.size() * F_->q());
    for (const Vec2& e : out)
      for (uint32_t c = 0; c < F_->q(); ++c)
        next.push_back({F_->add(e.x, F_->mul(c, basis[j].x)), F_->add(e.y, F_->mul(c, basis[j].y))});
    out.swap(next);
  }
  return out;
}

ElementSet Subspace::members() const { return ElementSet(member_elems()); }

std::vector<uint32_t> Subspace::coords(uint32_t a) const {
  std::vector<uint32_t> c(F_->n());
  F_->to_coords(a, c);
  return c;
}

std::vector<uint32_t> Subspace::coords(Vec2 v) const {
  const int n = F_->n();
  std::vector<uint32_t> c(2 * n);
  F_->to_coords(v.x, std::span<uint32_t>(c).subspan(0, n));
  F_->to_coords(v.y, std::span<uint32_t>(c).subspan(n, n));
  return c;
}

bool Subspace::contains_coords(std::vector<uint32_t> c) const {
  for (int r = 0; r < dim(); ++r) {
    uint32_t f = c[pivots_[r]];
    if (!f) continue;
    auto row = rref_.row(r);
    for (int j = pivots_[r]; j < rref_.cols; ++j) c[j] = F_->fq_sub(c[j], F_->fq_mul(f, row[j]));
  }
  return std::all_of(c.begin(), c.end(), [](uint32_t x) { return x == 0; });
}

bool Subspace::contains(uint32_t a) const {
  if (amb_ != Ambient::Fqn) throw Error(ErrorKind::AmbientMismatch, "expected an element of F_{q^n}^2");
  return contains_coords(coords(a));
}

bool Subspace::contains(Vec2 v) const {
  if (amb_ != Ambient::Fqn2) throw Error(ErrorKind::AmbientMismatch, "expected an element of F_{q^n}");
  return contains_coords(coords(v));
}

Subspace Subspace::scaled(uint32_t alpha) const {
  if (alpha == 0) throw Error(ErrorKind::InvalidArgument, "scaling by zero");
  if (amb_ == Ambient::Fqn) {
    auto b = basis_elems();
    for (auto& e : b) e = F_->mul(e, alpha);
    return span(F_, b);
  }
  auto b = basis_vecs();
  for (auto& v : b) v = {F_->mul(v.x, alpha), F_->mul(v.y, alpha)};
  return span(F_, b);
}

Subspace intersect(const Subspace& U, const Subspace& W) {
  require_same(U, W);
  const auto& F = *U.tower();
  const int N = U.ambient_dim();
  const int k = U.dim(), l = W.dim();
  // Zassenhaus: rows (u, u) and (w, 0); rows with zero left half span the meet.
  FqMatrix m(k + l, 2 * N);
  for (int r = 0; r < k; ++r)
    for (int j = 0; j < N; ++j) m.at(r, j) = m.at(r, N + j) = U.rref().at(r, j);
  for (int r = 0; r < l; ++r)
    for (int j = 0; j < N; ++j) m.at(k + r, j) = W.rref().at(r, j);
  RrefInfo info = F.rref(m);
  std::vector<int> rows;
  for (int r = 0; r < info.rank; ++r)
    if (info.pivots[r] >= N) rows.push_back(r);
  FqMatrix out(static_cast<int>(rows.size()), N);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < N; ++j) out.at(static_cast<int>(i), j) = m.at(rows[i], N + j);
  return Subspace::from_rows(U.tower(), U.ambient(), std::move(out));
}

Subspace sum(const Subspace& U, const Subspace& W) {
  require_same(U, W);
  const int N = U.ambient_dim();
  FqMatrix m(U.dim() + W.dim(), N);
  std::copy(U.rref().a.begin(), U.rref().a.end(), m.a.begin());
  std::copy(W.rref().a.begin(), W.rref().a.end(), m.a.begin() + static_cast<long>(U.dim()) * N);
  return Subspace::from_rows(U.tower(), U.ambient(), std::move(m));
}

ElementSet product_set(const Subspace& S, const Subspace& T) {
  require_same(S, T);
  const auto& F = *S.tower();
  auto s = S.member_elems(), t = T.member_elems();
  std::vector<uint32_t> out;
  out.reserve(s.size() * t.size());
  for (uint32_t a : s)
    for (uint32_t b : t) out.push_back(F.mul(a, b));
  return ElementSet(std::move(out));
}

ElementSet ratio_set(const Subspace& S) {
  const auto& F = *S.tower();
  auto m = S.member_elems();
  std::vector<uint32_t> out;
  for (uint32_t s : m) {
    if (!s) continue;
    uint32_t si = F.inv(s);
    for (uint32_t t : m) out.push_back(F.mul(t, si));
  }
  return ElementSet(std::move(out));
}

Subspace subfield_space(const TowerPtr& F, int t) { return Subspace::span(F, F->subfield_basis(t)); }

ScaledIntersection max_scaled_intersection(const Subspace& S, const Subspace& T) {
  require_same(S, T);
  const auto& F = *S.tower();
  ScaledIntersection best{-1, 1};
  const uint32_t reps = (F.size() - 1) / (F.q() - 1);
  for (uint32_t k = 0; k < reps; ++k) {
    uint32_t alpha = F.exp(k);
    int d = intersect(S, T.scaled(alpha)).dim();
    if (d > best.max_dim) best = {d, alpha};
  }
  return best;
}

ScatteredWrt scattered_wrt(const Subspace& S, int t) {
  const auto& F = *S.tower();
  if (!F.divides_n(t)) throw Error(ErrorKind::NotADivisor, std::to_string(t) + " does not divide n");
  Subspace K = subfield_space(S.tower(), t);
  uint64_t qt = 1;
  for (int i = 0; i < t; ++i) qt *= F.q();
  const uint64_t reps = (F.size() - 1) / (qt - 1);
  for (uint64_t k = 0; k < reps; ++k) {
    uint32_t alpha = F.exp(k);
    if (intersect(S, K.scaled(alpha)).dim() >= 2) return {false, alpha};
  }
  return {true, std::nullopt};
}

}  // namespace linset
