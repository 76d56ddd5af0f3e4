#include "linset/linset.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>

namespace linset {

uint64_t ipow(uint64_t b, int e) {
  uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

uint64_t theta(uint64_t q, int k) { return (ipow(q, k) - 1) / (q - 1); }

ProjPoint point_of(const FieldTower& F, Vec2 v) {
  if (v.x == 0) {
    if (v.y == 0) throw Error(ErrorKind::InvalidArgument, "zero vector has no point");
    return point_inf(F);
  }
  return {F.div(v.y, v.x)};
}

Vec2 representative(const FieldTower& F, ProjPoint P) {
  if (P.key == F.size()) return {0, 1};
  return {1, P.key};
}

std::map<int, uint64_t> LinearSet::spectrum_map() const {
  std::map<int, uint64_t> m;
  for (size_t i = 1; i < N_.size(); ++i)
    if (N_[i]) m[static_cast<int>(i)] = N_[i];
  return m;
}

int LinearSet::weight(ProjPoint P) const {
  auto it = std::lower_bound(pts_.begin(), pts_.end(), P,
                             [](const WeightedPoint& a, ProjPoint b) { return a.point < b; });
  return it != pts_.end() && it->point == P ? it->weight : 0;
}

std::vector<ProjPoint> LinearSet::point_set() const {
  std::vector<ProjPoint> v;
  for (const auto& p : pts_) v.push_back(p.point);
  return v;
}

namespace {

// Reduce coordinates c against an RREF matrix; returns the residue in place.
void reduce(const FieldTower& F, const Subspace& U, std::vector<uint32_t>& c) {
  const auto& R = U.rref();
  const auto& piv = U.pivots();
  for (int r = 0; r < R.rows; ++r) {
    uint32_t f = c[piv[r]];
    if (!f) continue;
    auto row = R.row(r);
    for (int j = piv[r]; j < R.cols; ++j) c[j] = F.fq_sub(c[j], F.fq_mul(f, row[j]));
  }
}

int log_q(uint64_t q, uint64_t v) {
  int e = 0;
  while (v > 1) {
    v /= q;
    ++e;
  }
  return e;
}

}  // namespace

int point_weight(const Subspace& U, Vec2 v) {
  const auto& F = *U.tower();
  const int n = F.n();
  FqMatrix res(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    uint32_t lam = static_cast<uint32_t>(ipow(F.q(), i));
    auto c = U.coords(Vec2{F.mul(lam, v.x), F.mul(lam, v.y)});
    reduce(F, U, c);
    std::copy(c.begin(), c.end(), res.row(i).begin());
  }
  return n - F.rank(std::move(res));
}

LinearSet linear_set(const Subspace& U, Exec ex, WeightMethod wm) {
  if (U.ambient() != Ambient::Fqn2) throw Error(ErrorKind::AmbientMismatch, "linear sets need a subspace of F_{q^n}^2");
  if (U.dim() == 0) throw Error(ErrorKind::ZeroSubspace, "rank 0");
  const auto& F = *U.tower();
  const uint64_t q = F.q();
  const int k = U.dim();
  const uint64_t total = ipow(q, k);
  const auto basis = U.basis_vecs();
  std::vector<std::atomic<uint32_t>> hits(static_cast<size_t>(F.size()) + 1);
  for (auto& h : hits) h.store(0, std::memory_order_relaxed);

  auto vec_at = [&](uint64_t idx) {
    Vec2 v{0, 0};
    for (int j = 0; j < k && idx; ++j) {
      uint32_t c = static_cast<uint32_t>(idx % q);
      idx /= q;
      if (c) v = {F.add(v.x, F.mul(c, basis[j].x)), F.add(v.y, F.mul(c, basis[j].y))};
    }
    return v;
  };
  const long long tot = static_cast<long long>(total);
  if (ex == Exec::Parallel) {
#pragma omp parallel for schedule(static) num_threads(threads())
    for (long long i = 1; i < tot; ++i) hits[point_of(F, vec_at(i)).key].fetch_add(1, std::memory_order_relaxed);
  } else {
    for (long long i = 1; i < tot; ++i) hits[point_of(F, vec_at(i)).key].fetch_add(1, std::memory_order_relaxed);
  }

  LinearSet L;
  L.U_ = U;
  for (uint32_t key = 0; key <= F.size(); ++key) {
    uint32_t h = hits[key].load(std::memory_order_relaxed);
    if (h) L.pts_.push_back({{key}, log_q(q, uint64_t{h} + 1)});
  }
  if (wm == WeightMethod::Solve) {
    const long long np = static_cast<long long>(L.pts_.size());
    auto solve = [&](long long i) {
      L.pts_[i].weight = point_weight(U, representative(F, L.pts_[i].point));
    };
    if (ex == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads())
      for (long long i = 0; i < np; ++i) solve(i);
    } else {
      for (long long i = 0; i < np; ++i) solve(i);
    }
  }
  L.N_.assign(k + 1, 0);
  for (const auto& p : L.pts_) {
    if (p.weight < 1 || p.weight > k) throw Error(ErrorKind::VerificationFailed, "weight out of range");
    L.N_[p.weight]++;
  }
  uint64_t sum = 0, wsum = 0;
  for (int i = 1; i <= k; ++i) {
    sum += L.N_[i];
    wsum += L.N_[i] * theta(q, i);
  }
  L.checks_.point_count = sum == L.pts_.size();
  L.checks_.vector_count = wsum == theta(q, k);
  L.checks_.card_bound = L.pts_.size() <= theta(q, k);
  if (!L.checks_.point_count || !L.checks_.vector_count || !L.checks_.card_bound)
    throw Error(ErrorKind::VerificationFailed, "weight identities fail for a linear set");
  return L;
}

std::vector<uint64_t> spectrum_by_point_scan(const Subspace& U, Exec ex) {
  const auto& F = *U.tower();
  const int k = U.dim();
  const long long np = static_cast<long long>(F.size()) + 1;
  std::vector<int> w(np, 0);
  if (ex == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads())
    for (long long i = 0; i < np; ++i) w[i] = point_weight(U, representative(F, {static_cast<uint32_t>(i)}));
  } else {
    for (long long i = 0; i < np; ++i) w[i] = point_weight(U, representative(F, {static_cast<uint32_t>(i)}));
  }
  std::vector<uint64_t> N(k + 1, 0);
  for (int x : w)
    if (x > 0) N[x]++;
  return N;
}

Subspace graph_space(const LinPoly& f) {
  const auto& F = f.tower();
  if (f.m() != F->n()) throw Error(ErrorKind::InvalidArgument, "graph needs a polynomial over F_{q^n}");
  std::vector<Vec2> g;
  for (int i = 0; i < F->n(); ++i) {
    uint32_t x = static_cast<uint32_t>(ipow(F->q(), i));
    g.push_back({x, f.eval(x)});
  }
  return Subspace::span(F, g);
}

LinearSet linear_set_of(const LinPoly& f, Exec ex) { return linear_set(graph_space(f), ex); }

LinearSet dual_linear_set(const LinPoly& f, Exec ex) { return linear_set(graph_space(f.adjoint()), ex); }

std::optional<ComplementaryPair> complementary_pair(const LinearSet& L) {
  const auto& pts = L.points();
  const int k = L.rank();
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i].weight + pts[j].weight == k) return ComplementaryPair{pts[i].point, pts[j].point, pts[i].weight, pts[j].weight};
  return std::nullopt;
}

TwoWeightBound check_bound_two_weight(const LinearSet& L, std::optional<int> t, std::optional<int> s) {
  const auto& F = *L.source().tower();
  TwoWeightBound b;
  b.k = L.rank();
  b.t = t.value_or(L.weight({0}));
  b.s = s.value_or(L.weight(point_inf(F)));
  b.observed = L.size();
  const uint64_t q = F.q();
  b.applicable = L.spectrum().size() > 1 && L.spectrum()[1] > 0 && b.t >= 1 && b.s >= 1 && b.t + b.s == b.k;
  if (!b.applicable) return b;
  const int hi = std::max(b.t, b.s), lo = std::min(b.t, b.s);
  b.lower = ipow(q, b.k - 1) + 1;
  uint64_t up = 1;
  for (int i = hi; i <= b.k - 1; ++i) up += ipow(q, i);
  for (int i = 1; i <= lo - 1; ++i) up -= ipow(q, i);
  b.upper = up;
  b.ok = b.lower <= b.observed && b.observed <= b.upper;
  return b;
}

}  // namespace linset
