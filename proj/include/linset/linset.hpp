#pragma once

// Linear sets L_U of PG(1, q^n) for F_q-subspaces U of F_{q^n}^2.

#include <map>
#include <optional>
#include <vector>

#include "linset/exec.hpp"
#include "linset/linpoly.hpp"
#include "linset/subspace.hpp"

namespace linset {

// Point <(x, y)>: key y/x when x != 0, key q^n for <(0, 1)>.  Points sort by key.
struct ProjPoint {
  uint32_t key = 0;
  friend bool operator==(ProjPoint, ProjPoint) = default;
  friend auto operator<=>(ProjPoint, ProjPoint) = default;
};

ProjPoint point_of(const FieldTower& F, Vec2 v);  // v != 0
Vec2 representative(const FieldTower& F, ProjPoint P);
inline ProjPoint point_inf(const FieldTower& F) { return {F.size()}; }  // <(0,1)>

struct WeightedPoint {
  ProjPoint point;
  int weight = 0;
  friend bool operator==(const WeightedPoint&, const WeightedPoint&) = default;
};

enum class WeightMethod { Solve, Count };

struct LinearSetChecks {
  bool point_count = false;
  bool vector_count = false;
  bool card_bound = false;
};

class LinearSet {
 public:
  const Subspace& source() const noexcept { return U_; }
  int rank() const noexcept { return U_.dim(); }
  uint64_t size() const noexcept { return pts_.size(); }
  const std::vector<WeightedPoint>& points() const noexcept { return pts_; }
  // spectrum()[i] = N_i for i = 0..rank.
  const std::vector<uint64_t>& spectrum() const noexcept { return N_; }
  std::map<int, uint64_t> spectrum_map() const;
  int weight(ProjPoint P) const;  // 0 if P is not in L_U
  const LinearSetChecks& checks() const noexcept { return checks_; }
  std::vector<ProjPoint> point_set() const;

 private:
  friend LinearSet linear_set(const Subspace& U, Exec ex, WeightMethod wm);
  Subspace U_;
  std::vector<WeightedPoint> pts_;
  std::vector<uint64_t> N_;
  LinearSetChecks checks_;
};

// Throws ZeroSubspace for dim U = 0 and VerificationFailed if a weight identity fails.
LinearSet linear_set(const Subspace& U, Exec ex = Exec::Parallel, WeightMethod wm = WeightMethod::Solve);

// dim_{F_q}(U cap <v>_{F_{q^n}}) by a linear solve.
int point_weight(const Subspace& U, Vec2 v);

// Same spectrum computed from a full scan of PG(1,q^n), one solve per point.
std::vector<uint64_t> spectrum_by_point_scan(const Subspace& U, Exec ex = Exec::Parallel);

// U_f = {(x, f(x))}.  f must be over the full field F_{q^n}.
Subspace graph_space(const LinPoly& f);
LinearSet linear_set_of(const LinPoly& f, Exec ex = Exec::Parallel);
LinearSet dual_linear_set(const LinPoly& f, Exec ex = Exec::Parallel);

struct ComplementaryPair {
  ProjPoint P, Q;
  int s = 0, t = 0;
};
std::optional<ComplementaryPair> complementary_pair(const LinearSet& L);

struct TwoWeightBound {
  bool applicable = false;  // needs a weight-one point and t + s = k
  int t = 0, s = 0, k = 0;
  uint64_t lower = 0, upper = 0, observed = 0;
  bool ok = true;
};
// t, s default to the weights of <(1,0)> and <(0,1)>.
TwoWeightBound check_bound_two_weight(const LinearSet& L, std::optional<int> t = {}, std::optional<int> s = {});

uint64_t ipow(uint64_t b, int e);
// (q^k - 1)/(q - 1)
uint64_t theta(uint64_t q, int k);

}  // namespace linset
