#pragma once

// F_q-subspaces of F_{q^n} and F_{q^n}^2, stored by their reduced row-echelon
// basis over F_q.  A vector of F_{q^n}^2 has F_q coordinates (coords(x), coords(y)).

#include <optional>
#include <vector>

#include "linset/gf.hpp"

namespace linset {

enum class Ambient { Fqn, Fqn2 };

struct Vec2 {
  uint32_t x = 0;
  uint32_t y = 0;
  friend bool operator==(Vec2, Vec2) = default;
  friend auto operator<=>(Vec2, Vec2) = default;
};

// Sorted, duplicate-free set of packed elements.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::vector<uint32_t> v);
  bool contains(uint32_t a) const;
  size_t size() const noexcept { return v_.size(); }
  const std::vector<uint32_t>& values() const noexcept { return v_; }
  ElementSet intersect(const ElementSet& o) const;
  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<uint32_t> v_;
};

class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(TowerPtr F, Ambient amb);
  static Subspace full(TowerPtr F, Ambient amb);
  static Subspace from_rows(TowerPtr F, Ambient amb, FqMatrix rows);
  static Subspace span(TowerPtr F, const std::vector<uint32_t>& elems);
  static Subspace span(TowerPtr F, const std::vector<Vec2>& vecs);

  const TowerPtr& tower() const noexcept { return F_; }
  Ambient ambient() const noexcept { return amb_; }
  int ambient_dim() const noexcept { return amb_ == Ambient::Fqn ? F_->n() : 2 * F_->n(); }
  int dim() const noexcept { return rref_.rows; }
  const FqMatrix& rref() const noexcept { return rref_; }
  const std::vector<int>& pivots() const noexcept { return pivots_; }

  // Basis rows as elements (Fqn) or vector pairs (Fqn2).
  std::vector<uint32_t> basis_elems() const;
  std::vector<Vec2> basis_vecs() const;

  // Members in lexicographic order of their coordinates relative to the basis
  // (first basis vector varies fastest).
  std::vector<uint32_t> member_elems() const;
  std::vector<Vec2> member_vecs() const;
  ElementSet members() const;  // Fqn only, sorted

  bool contains(uint32_t a) const;
  bool contains(Vec2 v) const;

  // Multiply every element by a nonzero scalar.
  Subspace scaled(uint32_t alpha) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.amb_ == b.amb_ && a.rref_ == b.rref_;
  }

  // Coordinates of a vector in F_q^{ambient_dim}.
  std::vector<uint32_t> coords(uint32_t a) const;
  std::vector<uint32_t> coords(Vec2 v) const;

 private:
  bool contains_coords(std::vector<uint32_t> c) const;
  TowerPtr F_;
  Ambient amb_ = Ambient::Fqn;
  FqMatrix rref_;
  std::vector<int> pivots_;
};

Subspace intersect(const Subspace& U, const Subspace& W);
Subspace sum(const Subspace& U, const Subspace& W);

// S * S^{-1} = {t s^{-1} : s in S \ {0}, t in S}; contains 0 when dim S >= 1.
ElementSet ratio_set(const Subspace& S);
ElementSet product_set(const Subspace& S, const Subspace& T);

// The F_{q^t} subfield as a subspace of F_{q^n}.
Subspace subfield_space(const TowerPtr& F, int t);

// Largest dim(S cap alpha T) over alpha != 0 with the first alpha attaining it.
// Alpha ranges over g^k, k < (q^n-1)/(q-1), a transversal of F_{q^n}^*/F_q^*.
struct ScaledIntersection {
  int max_dim = 0;
  uint32_t alpha = 1;
};
ScaledIntersection max_scaled_intersection(const Subspace& S, const Subspace& T);

// dim(S cap alpha F_{q^t}) <= 1 for every alpha; witness alpha otherwise.
struct ScatteredWrt {
  bool scattered = true;
  std::optional<uint32_t> witness;
};
ScatteredWrt scattered_wrt(const Subspace& S, int t);

}  // namespace linset
