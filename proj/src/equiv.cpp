#include "linset/equiv.hpp"

#include <algorithm>
#include <json.hpp>
#include <limits>
#include <tuple>

namespace linset {

namespace {

using nlohmann::json;

void require_fqn2(const Subspace& U) {
  if (U.ambient() != Ambient::Fqn2) throw Error(ErrorKind::AmbientMismatch, "expected a subspace of F_{q^n}^2");
}

void require_fqn(const Subspace& U) {
  if (U.ambient() != Ambient::Fqn) throw Error(ErrorKind::AmbientMismatch, "expected a subspace of F_{q^n}");
}

void require_same_tower(const Subspace& U, const Subspace& W) {
  if (!U.tower()->same_as(*W.tower())) throw Error(ErrorKind::TowerMismatch, "subspaces live in different towers");
}

bool maps_into(const FieldTower& F, const SemilinearMap& m, const std::vector<Vec2>& basis, const Subspace& W) {
  for (Vec2 v : basis)
    if (!W.contains(apply(F, m, v))) return false;
  return true;
}

// Smallest lambda != 0 with lambda X = Y.
std::optional<uint32_t> scalar_between(const Subspace& X, const Subspace& Y) {
  if (X.dim() != Y.dim() || X.dim() == 0) return std::nullopt;
  const auto& F = *X.tower();
  uint32_t b = X.basis_elems()[0];
  std::vector<uint32_t> cand;
  for (uint32_t y : Y.member_elems())
    if (y) cand.push_back(F.div(y, b));
  std::sort(cand.begin(), cand.end());
  for (uint32_t l : cand)
    if (X.scaled(l) == Y) return l;
  return std::nullopt;
}

std::string u128_string(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return {s.rbegin(), s.rend()};
}

unsigned __int128 required_wide(const FieldTower& F) {
  unsigned __int128 Q = F.size();
  return (Q * Q - 1) * (Q * Q - Q) * static_cast<unsigned>(F.aut_order());
}

std::tuple<int, bool, uint32_t, uint32_t> order_key(const CriteriaWitness& w) {
  return {w.rho, w.swapped, w.lambda, w.mu};
}

}  // namespace

Vec2 apply(const FieldTower& F, const SemilinearMap& m, Vec2 v) {
  return apply(F, m.matrix, Vec2{F.aut(v.x, m.rho), F.aut(v.y, m.rho)});
}

Subspace image(const SemilinearMap& m, const Subspace& U) {
  require_fqn2(U);
  const auto& F = *U.tower();
  if (!det(F, m.matrix)) throw Error(ErrorKind::SingularInput, "matrix is singular");
  std::vector<Vec2> img;
  for (Vec2 v : U.basis_vecs()) img.push_back(apply(F, m, v));
  if (img.empty()) return U;
  return Subspace::span(U.tower(), img);
}

Subspace apply(const SemilinearMap& m, const Subspace& U) {
  Subspace W = image(m, U);
  if (U.dim() == 0) return W;
  auto before = linear_set(U).spectrum();
  auto after = linear_set(W).spectrum();
  if (before != after)
    throw Error(ErrorKind::VerificationFailed, "semilinear image changed the weight spectrum",
                json{{"before", before}, {"after", after}, {"rho", m.rho}}.dump());
  return W;
}

Subspace aut_image(const Subspace& U, int e) {
  const auto& F = *U.tower();
  if (U.dim() == 0) return U;
  if (U.ambient() == Ambient::Fqn) {
    std::vector<uint32_t> v;
    for (uint32_t a : U.basis_elems()) v.push_back(F.aut(a, e));
    return Subspace::span(U.tower(), v);
  }
  std::vector<Vec2> v;
  for (Vec2 a : U.basis_vecs()) v.push_back({F.aut(a.x, e), F.aut(a.y, e)});
  return Subspace::span(U.tower(), v);
}

SemilinearMap CriteriaWitness::map(const FieldTower&) const {
  Mat2 m = swapped ? Mat2{0, mu, lambda, 0} : Mat2{mu, 0, 0, lambda};
  return {m, rho};
}

bool unique_weight_precondition(const Subspace& T, const Subspace& S) {
  require_fqn(T);
  require_fqn(S);
  require_same_tower(T, S);
  const int t = T.dim(), s = S.dim();
  if (t == 0 || s == 0) return false;
  auto L = linear_set(product_space(T, S));
  const auto& F = *T.tower();
  if (L.weight({0}) != t || L.weight(point_inf(F)) != s) return false;
  uint64_t nt = 0, ns = 0;
  for (const auto& wp : L.points()) {
    if (wp.weight == t) ++nt;
    if (wp.weight == s) ++ns;
  }
  if (t == s) return nt == 2;
  return nt == 1 && ns == 1;
}

std::vector<std::optional<CriteriaWitness>> criteria_search(const Subspace& S, const Subspace& T,
                                                            const Subspace& S2, const Subspace& T2) {
  for (const Subspace* X : {&S, &T, &S2, &T2}) require_same_tower(S, *X);
  for (auto [a, b, which] : {std::tuple{&T, &S, "U"}, std::tuple{&T2, &S2, "U'"}})
    if (!unique_weight_precondition(*a, *b))
      throw Error(ErrorKind::PreconditionUniqueWeightFailed,
                  std::string("the coordinate points are not the unique points of their weights in L_") + which,
                  json{{"side", which}, {"dim_T", a->dim()}, {"dim_S", b->dim()}}.dump());
  const auto& F = *S.tower();
  Subspace U = product_space(T, S), U2 = product_space(T2, S2);
  auto basis = U.basis_vecs();
  std::vector<std::optional<CriteriaWitness>> out(F.aut_order());
  for (int rho = 0; rho < F.aut_order(); ++rho) {
    Subspace Tr = aut_image(T, rho), Sr = aut_image(S, rho);
    for (bool swapped : {false, true}) {
      auto lambda = scalar_between(swapped ? Tr : Sr, S2);
      if (!lambda) continue;
      auto mu = scalar_between(swapped ? Sr : Tr, T2);
      if (!mu) continue;
      CriteriaWitness w{*lambda, *mu, rho, swapped};
      if (!maps_into(F, w.map(F), basis, U2) || U.dim() != U2.dim())
        throw Error(ErrorKind::VerificationFailed, "criteria witness does not map U onto U'",
                    json{{"lambda", w.lambda}, {"mu", w.mu}, {"rho", rho}, {"swapped", swapped}}.dump());
      out[rho] = w;
      break;
    }
  }
  return out;
}

std::optional<CriteriaWitness> criteria_equivalent(const Subspace& S, const Subspace& T, const Subspace& S2,
                                                   const Subspace& T2) {
  for (auto& w : criteria_search(S, T, S2, T2))
    if (w) return w;
  return std::nullopt;
}

DiagonalScan diagonal_scan(const Subspace& S, const Subspace& T, const Subspace& S2, const Subspace& T2, Exec ex) {
  for (const Subspace* X : {&S, &T, &S2, &T2}) require_same_tower(S, *X);
  const auto& F = *S.tower();
  Subspace U = product_space(T, S), U2 = product_space(T2, S2);
  auto basis = U.basis_vecs();
  const uint32_t Q = F.size();
  const int64_t outer = int64_t{F.aut_order()} * 2 * (Q - 1);
  DiagonalScan r;
  r.checked = static_cast<uint64_t>(outer) * (Q - 1);
  if (U.dim() != U2.dim()) return r;
  uint64_t found = 0;
  std::optional<CriteriaWitness> best;
  auto body = [&](int64_t o, uint64_t& cnt, std::optional<CriteriaWitness>& first) {
    int rho = static_cast<int>(o / (2 * (Q - 1)));
    bool swapped = (o / (Q - 1)) % 2;
    uint32_t lambda = static_cast<uint32_t>(o % (Q - 1)) + 1;
    for (uint32_t mu = 1; mu < Q; ++mu) {
      CriteriaWitness w{lambda, mu, rho, swapped};
      if (!maps_into(F, w.map(F), basis, U2)) continue;
      ++cnt;
      if (!first || order_key(w) < order_key(*first)) first = w;
    }
  };
  if (ex == Exec::Serial) {
    for (int64_t o = 0; o < outer; ++o) body(o, found, best);
  } else {
#pragma omp parallel num_threads(threads())
    {
      uint64_t cnt = 0;
      std::optional<CriteriaWitness> first;
#pragma omp for schedule(dynamic, 4)
      for (int64_t o = 0; o < outer; ++o) body(o, cnt, first);
#pragma omp critical
      {
        found += cnt;
        if (first && (!best || order_key(*first) < order_key(*best))) best = first;
      }
    }
  }
  r.found = found;
  r.first = best;
  return r;
}

uint64_t brute_required(const FieldTower& F) {
  auto w = required_wide(F);
  if (w > std::numeric_limits<uint64_t>::max()) return std::numeric_limits<uint64_t>::max();
  return static_cast<uint64_t>(w);
}

BruteResult brute_equivalent(const Subspace& U, const Subspace& U2, uint64_t budget, Exec ex) {
  require_fqn2(U);
  require_fqn2(U2);
  require_same_tower(U, U2);
  const auto& F = *U.tower();
  auto wide = required_wide(F);
  if (wide > budget)
    throw Error(ErrorKind::BudgetExceeded,
                "brute force needs " + u128_string(wide) + " map applications, budget is " + std::to_string(budget),
                json{{"required", u128_string(wide)}, {"budget", budget}}.dump());
  BruteResult r;
  r.required = static_cast<uint64_t>(wide);
  if (U.dim() != U2.dim() || U.dim() == 0) {
    r.exhaustive = true;
    if (U.dim() == U2.dim()) r.witness = SemilinearMap{};
    return r;
  }
  const uint32_t Q = F.size();
  const int hn = F.aut_order();
  auto members = U2.member_vecs();
  std::vector<uint64_t> packed;
  std::vector<char> xs(Q, 0), ys(Q, 0);
  for (Vec2 v : members) {
    packed.push_back(uint64_t{v.x} * Q + v.y);
    xs[v.x] = 1;
    ys[v.y] = 1;
  }
  std::sort(packed.begin(), packed.end());
  auto basis = U.basis_vecs();
  const size_t k = basis.size();
  std::vector<std::vector<uint32_t>> bx(hn, std::vector<uint32_t>(k)), by = bx;
  for (int e = 0; e < hn; ++e)
    for (size_t i = 0; i < k; ++i) {
      bx[e][i] = F.aut(basis[i].x, e);
      by[e][i] = F.aut(basis[i].y, e);
    }

  // First witness in row (a, b), as (c*Q + d, e).
  auto scan_row = [&](uint64_t row) -> std::optional<std::pair<uint64_t, int>> {
    uint32_t a = static_cast<uint32_t>(row / Q), b = static_cast<uint32_t>(row % Q);
    std::vector<std::vector<uint32_t>> fx(hn);
    bool any = false;
    for (int e = 0; e < hn; ++e) {
      std::vector<uint32_t> f(k);
      bool ok = true;
      for (size_t i = 0; i < k && ok; ++i) {
        f[i] = F.add(F.mul(a, bx[e][i]), F.mul(b, by[e][i]));
        ok = xs[f[i]];
      }
      if (ok) {
        fx[e] = std::move(f);
        any = true;
      }
    }
    if (!any) return std::nullopt;
    for (uint32_t c = 0; c < Q; ++c)
      for (uint32_t d = 0; d < Q; ++d) {
        if (F.mul(a, d) == F.mul(b, c)) continue;
        for (int e = 0; e < hn; ++e) {
          if (fx[e].empty()) continue;
          bool ok = true;
          for (size_t i = 0; i < k && ok; ++i) {
            uint32_t g = F.add(F.mul(c, bx[e][i]), F.mul(d, by[e][i]));
            ok = ys[g] && std::binary_search(packed.begin(), packed.end(), uint64_t{fx[e][i]} * Q + g);
          }
          if (ok) return std::pair{uint64_t{c} * Q + d, e};
        }
      }
    return std::nullopt;
  };

  const uint64_t rows = uint64_t{Q} * Q;
  uint64_t best_row = rows;
  std::pair<uint64_t, int> best{};
  if (ex == Exec::Serial) {
    for (uint64_t row = 1; row < rows; ++row)
      if (auto w = scan_row(row)) {
        best_row = row;
        best = *w;
        break;
      }
  } else {
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads())
    for (int64_t row = 1; row < static_cast<int64_t>(rows); ++row) {
      uint64_t cur;
#pragma omp atomic read
      cur = best_row;
      if (static_cast<uint64_t>(row) >= cur) continue;
      if (auto w = scan_row(static_cast<uint64_t>(row))) {
#pragma omp critical
        if (static_cast<uint64_t>(row) < best_row) {
          best = *w;
#pragma omp atomic write
          best_row = static_cast<uint64_t>(row);
        }
      }
    }
  }
  if (best_row == rows) {
    r.checked = r.required;
    r.exhaustive = true;
    return r;
  }
  uint32_t a = static_cast<uint32_t>(best_row / Q), b = static_cast<uint32_t>(best_row % Q);
  uint32_t c = static_cast<uint32_t>(best.first / Q), d = static_cast<uint32_t>(best.first % Q);
  // Invertible second rows before (c, d): all earlier pairs minus multiples of (a, b).
  uint64_t dependent = 0;
  for (uint32_t l = 0; l < Q; ++l)
    if (uint64_t{F.mul(l, a)} * Q + F.mul(l, b) < best.first) ++dependent;
  uint64_t before = (best_row - 1) * (uint64_t{Q} * Q - Q) + (best.first - dependent);
  r.checked = before * hn + best.second + 1;
  r.witness = SemilinearMap{Mat2{a, b, c, d}, best.second};
  if (image(*r.witness, U) != U2) throw Error(ErrorKind::VerificationFailed, "brute witness does not map U onto U'");
  return r;
}

bool quadratic_irreducible(const FieldTower& F, int t, uint32_t a, uint32_t b) {
  for (uint32_t z : F.subfield_elements(t))
    if (F.mul(z, z) == F.add(F.mul(a, z), b)) return false;
  return true;
}

Mat2 singer_matrix(const FieldTower& F, uint32_t mu0, uint32_t mu1, uint32_t a, uint32_t b) {
  return {mu0, F.mul(mu1, b), mu1, F.add(mu0, F.mul(a, mu1))};
}

SingerFactors singer_decompose(const FieldTower& F, int t, const Mat2& M, uint32_t a, uint32_t b) {
  if (!F.divides_n(t)) throw Error(ErrorKind::InvalidArgument, "t must divide n");
  for (uint32_t v : {M.a, M.b, M.c, M.d, a, b})
    if (!F.in_subfield(v, t))
      throw Error(ErrorKind::InvalidArgument, "entries must lie in F_{q^" + std::to_string(t) + "}",
                  json{{"element", v}}.dump());
  for (uint32_t z : F.subfield_elements(t))
    if (F.mul(z, z) == F.add(F.mul(a, z), b))
      throw Error(ErrorKind::ReduciblePolynomial, "x^2 - a x - b has a root in F_{q^t}",
                  json{{"a", a}, {"b", b}, {"root", z}}.dump());
  if (!det(F, M)) throw Error(ErrorKind::SingularInput, "matrix is singular");
  SingerFactors f{M.a, M.c, 0, 0};
  uint32_t m22 = F.add(f.mu0, F.mul(a, f.mu1));
  uint32_t D = F.sub(F.mul(f.mu0, m22), F.mul(b, F.mul(f.mu1, f.mu1)));
  f.beta = F.div(F.sub(F.mul(M.b, m22), F.mul(F.mul(f.mu1, b), M.d)), D);
  f.alpha = F.div(F.sub(F.mul(f.mu0, M.d), F.mul(f.mu1, M.b)), D);
  return f;
}

SingerSweep singer_sweep(const FieldTower& F, int t, Exec ex) {
  const auto& sub = F.subfield_elements(t);
  std::vector<std::pair<uint32_t, uint32_t>> polys;
  for (uint32_t a : sub)
    for (uint32_t b : sub)
      if (quadratic_irreducible(F, t, a, b)) polys.emplace_back(a, b);
  const size_t m = sub.size();
  const int64_t total = static_cast<int64_t>(polys.size() * m);
  SingerSweep r;
  r.polynomials = polys.size();
  uint64_t matrices = 0, ok = 0, bad = 0;
  // One work item per (polynomial, M11).
  auto body = [&](int64_t item, uint64_t& mats, uint64_t& good, uint64_t& fail) {
    auto [a, b] = polys[item / m];
    uint32_t m11 = sub[item % m];
    for (uint32_t m12 : sub)
      for (uint32_t m21 : sub)
        for (uint32_t m22 : sub) {
          Mat2 M{m11, m12, m21, m22};
          if (!det(F, M)) continue;
          if (item / m == 0) ++mats;
          auto f = singer_decompose(F, t, M, a, b);
          bool fine = (f.mu0 || f.mu1) && f.alpha &&
                      mul(F, singer_matrix(F, f.mu0, f.mu1, a, b), Mat2{1, f.beta, 0, f.alpha}) == M;
          ++(fine ? good : fail);
        }
  };
  if (ex == Exec::Serial) {
    for (int64_t i = 0; i < total; ++i) body(i, matrices, ok, bad);
  } else {
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : matrices, ok, bad) num_threads(threads())
    for (int64_t i = 0; i < total; ++i) body(i, matrices, ok, bad);
  }
  r.matrices = matrices;
  r.reconstructed = ok;
  r.failures = bad;
  return r;
}

const char* MonomialCase::label() const {
  if (I1) return "I.1";
  if (I2) return "I.2";
  if (II1) return "II.1";
  if (II2) return "II.2";
  return "none";
}

std::pair<Subspace, Subspace> monomial_factors(const TowerPtr& Fp, int s, uint32_t mu, uint32_t xi) {
  const int t = Fp->n() / 2;
  return {subfield_graph(LinPoly::monomial(Fp, s, 1, t), xi).space,
          subfield_graph(LinPoly::monomial(Fp, s, mu, t), xi).space};
}

MonomialCase monomial_equiv_conditions(const TowerPtr& Fp, int s, int s2, uint32_t xi, uint32_t eta, uint32_t mu1,
                                       uint32_t mu2, int sigma) {
  const auto& F = *Fp;
  if (F.n() % 2) throw Error(ErrorKind::InvalidArgument, "n must be even");
  const int t = F.n() / 2;
  if (t < 3) throw Error(ErrorKind::TTooSmall, "the classification needs t >= 3", json{{"t", t}}.dump());
  if (!mu1 || !mu2) throw Error(ErrorKind::InvalidArgument, "mu_1 and mu_2 must be nonzero");
  check_ex2_params(F, s, mu1, xi);
  check_ex2_params(F, s2, mu2, eta);
  const int hn = F.aut_order();
  sigma = ((sigma % hn) + hn) % hn;
  auto inv_sigma = [&](uint32_t x) { return F.aut(x, (hn - sigma) % hn); };
  auto N = [&](uint32_t x) { return subfield_norm(F, t, x); };
  MonomialCase r;
  r.t = t;
  auto xd = xi_data(F, xi);
  auto ed = eta_data(F, xi, F.aut(eta, sigma));
  r.a = xd.a;
  r.b = xd.b;
  r.A = ed.A;
  r.B = ed.B;
  const int sm = ((s % t) + t) % t, s2m = ((s2 % t) + t) % t;
  r.case_I = (sm + s2m) % t == 0 && F.add(r.B, F.mul(r.A, r.a)) == 0;
  r.case_II = sm == s2m && r.B == 0;
  if (r.case_I) {
    uint32_t c1 = F.inv(F.mul(mu2, F.mul(inv_sigma(r.A), inv_sigma(r.b))));
    uint32_t c2 = F.inv(F.mul(mu1, F.frob(F.mul(r.A, r.b), s)));
    r.I1 = N(c1) == 1 && N(c2) == 1;
    uint32_t c = F.inv(F.mul(mu2, inv_sigma(F.frob(mu1, t - sm))));
    r.I2 = N(F.mul(r.A, r.b)) == 1 && N(c) == 1;
    r.c = {c1, c2, c};
  }
  if (r.case_II) {
    uint32_t c1 = F.mul(mu2, inv_sigma(r.A));
    uint32_t c2 = F.div(r.A, mu1);
    r.II1 = N(c1) == 1 && N(c2) == 1;
    uint32_t c = F.div(F.mul(mu2, inv_sigma(r.A)), inv_sigma(mu1));
    r.II2 = N(r.A) == 1 && N(c) == 1;
    r.c.insert(r.c.end(), {c1, c2, c});
  }
  return r;
}

}  // namespace linset
