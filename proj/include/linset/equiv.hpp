#pragma once

// GammaL(2, q^n)-equivalence of F_q-subspaces of F_{q^n}^2.

#include <optional>
#include <vector>

#include "linset/construct.hpp"

namespace linset {

// v -> matrix * (x^{p^rho}, y^{p^rho}).
struct SemilinearMap {
  Mat2 matrix;
  int rho = 0;
  friend bool operator==(const SemilinearMap&, const SemilinearMap&) = default;
};

Vec2 apply(const FieldTower& F, const SemilinearMap& m, Vec2 v);
// Image without the spectrum check.
Subspace image(const SemilinearMap& m, const Subspace& U);
// Image of U; throws VerificationFailed if the weight spectrum changes.
Subspace apply(const SemilinearMap& m, const Subspace& U);
// U^{p^e} for either ambient.
Subspace aut_image(const Subspace& U, int e);

// U = T x S, U' = T2 x S2.  Unswapped: T2 = mu T^rho, S2 = lambda S^rho,
// matrix diag(mu, lambda).  Swapped: T2 = mu S^rho, S2 = lambda T^rho,
// matrix (0 mu; lambda 0).
struct CriteriaWitness {
  uint32_t lambda = 0, mu = 0;
  int rho = 0;
  bool swapped = false;
  SemilinearMap map(const FieldTower& F) const;
  friend bool operator==(const CriteriaWitness&, const CriteriaWitness&) = default;
};

// <(1,0)> and <(0,1)> are the only points of weight dim T and dim S in L_U.
bool unique_weight_precondition(const Subspace& T, const Subspace& S);

// Per automorphism exponent, the first witness (unswapped before swapped,
// then lambda, then mu in index order).  Throws PreconditionUniqueWeightFailed.
std::vector<std::optional<CriteriaWitness>> criteria_search(const Subspace& S, const Subspace& T,
                                                            const Subspace& S2, const Subspace& T2);
std::optional<CriteriaWitness> criteria_equivalent(const Subspace& S, const Subspace& T, const Subspace& S2,
                                                   const Subspace& T2);

// Every (lambda, mu, rho, swapped) tried by applying the map to U.
struct DiagonalScan {
  uint64_t checked = 0;
  uint64_t found = 0;
  std::optional<CriteriaWitness> first;
};
DiagonalScan diagonal_scan(const Subspace& S, const Subspace& T, const Subspace& S2, const Subspace& T2,
                           Exec ex = Exec::Parallel);

inline constexpr uint64_t kDefaultBudget = 100'000'000;

struct BruteResult {
  std::optional<SemilinearMap> witness;
  uint64_t required = 0;  // |GL(2,q^n)| * h n
  uint64_t checked = 0;   // maps up to and including the witness in canonical order
  bool exhaustive = false;
};
// |GL(2, q^n)| * h n.
uint64_t brute_required(const FieldTower& F);
// Lexicographic in (a, b, c, d), then rho.  Throws BudgetExceeded.
BruteResult brute_equivalent(const Subspace& U, const Subspace& U2, uint64_t budget = kDefaultBudget,
                             Exec ex = Exec::Parallel);

// M = (mu0 mu1 b; mu1 mu0 + a mu1) (1 beta; 0 alpha) over F_{q^t}.
struct SingerFactors {
  uint32_t mu0 = 0, mu1 = 0, alpha = 0, beta = 0;
};
bool quadratic_irreducible(const FieldTower& F, int t, uint32_t a, uint32_t b);  // x^2 - a x - b
SingerFactors singer_decompose(const FieldTower& F, int t, const Mat2& M, uint32_t a, uint32_t b);
Mat2 singer_matrix(const FieldTower& F, uint32_t mu0, uint32_t mu1, uint32_t a, uint32_t b);

struct SingerSweep {
  uint64_t polynomials = 0;
  uint64_t matrices = 0;       // invertible matrices per polynomial
  uint64_t reconstructed = 0;  // over all polynomials
  uint64_t failures = 0;
};
SingerSweep singer_sweep(const FieldTower& F, int t, Exec ex = Exec::Parallel);

// The case analysis for U = S_{x^{q^s},xi} x S_{mu1 x^{q^s},xi} and
// U' = S_{x^{q^s2},eta} x S_{mu2 x^{q^s2},eta} with companion automorphism x^{p^sigma}.
struct MonomialCase {
  int t = 0;
  uint32_t a = 0, b = 0, A = 0, B = 0;
  bool case_I = false, case_II = false;  // congruence and B condition
  bool I1 = false, I2 = false, II1 = false, II2 = false;
  std::vector<uint32_t> c;  // the c values of whichever subcases were evaluated
  bool equivalent() const { return I1 || I2 || II1 || II2; }
  const char* label() const;
};
MonomialCase monomial_equiv_conditions(const TowerPtr& F, int s, int s2, uint32_t xi, uint32_t eta, uint32_t mu1,
                                       uint32_t mu2, int sigma);
// The two product factors (first, second) of the monomial two-weight subspace.
std::pair<Subspace, Subspace> monomial_factors(const TowerPtr& F, int s, uint32_t mu, uint32_t xi);

}  // namespace linset
