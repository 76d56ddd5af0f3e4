#include "linset/linpoly.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>

namespace linset {

namespace {

int resolve_m(const FieldTower& F, int m) {
  if (m == 0) return F.n();
  if (!F.divides_n(m)) throw Error(ErrorKind::NotADivisor, std::to_string(m) + " does not divide n");
  return m;
}

void require_same(const LinPoly& f, const LinPoly& g) {
  if (f.tower().get() != g.tower().get()) throw Error(ErrorKind::TowerMismatch, "polynomials over different towers");
  if (f.m() != g.m()) throw Error(ErrorKind::TowerMismatch, "polynomials over different subfields");
}

std::vector<int> basis_pivots(const FieldTower& F, int m) {
  std::vector<int> piv;
  for (uint32_t b : F.subfield_basis(m)) {
    int i = 0;
    while (F.coord(b, i) == 0) ++i;
    piv.push_back(i);
  }
  return piv;
}

}  // namespace

std::vector<uint32_t> subfield_coords(const FieldTower& F, int m, uint32_t a) {
  std::vector<uint32_t> c;
  for (int p : basis_pivots(F, m)) c.push_back(F.coord(a, p));
  return c;
}

uint32_t subfield_norm(const FieldTower& F, int m, uint32_t a) {
  uint32_t r = 1;
  for (int i = 0; i < m; ++i) r = F.mul(r, F.frob(a, i));
  return r;
}

uint32_t subfield_trace(const FieldTower& F, int m, uint32_t a) {
  uint32_t r = 0;
  for (int i = 0; i < m; ++i) r = F.add(r, F.frob(a, i));
  return r;
}

LinPoly::LinPoly(TowerPtr F, std::vector<uint32_t> coeffs, int m) : F_(std::move(F)) {
  m_ = resolve_m(*F_, m);
  if (static_cast<int>(coeffs.size()) > m_) {
    // Fold exponents mod m.
    std::vector<uint32_t> c(m_, 0);
    for (size_t i = 0; i < coeffs.size(); ++i) c[i % m_] = F_->add(c[i % m_], coeffs[i]);
    coeffs = std::move(c);
  }
  coeffs.resize(m_, 0);
  for (uint32_t a : coeffs) {
    if (a >= F_->size()) throw Error(ErrorKind::InvalidArgument, "coefficient out of range");
    if (m_ != F_->n() && !F_->in_subfield(a, m_))
      throw Error(ErrorKind::InvalidArgument, "coefficient outside F_{q^" + std::to_string(m_) + "}");
  }
  c_ = std::move(coeffs);
}

LinPoly LinPoly::zero(TowerPtr F, int m) { return LinPoly(std::move(F), {}, m); }

LinPoly LinPoly::identity(TowerPtr F, int m) { return monomial(std::move(F), 0, 1, m); }

LinPoly LinPoly::monomial(TowerPtr F, int i, uint32_t coeff, int m) {
  int mm = resolve_m(*F, m);
  std::vector<uint32_t> c(mm, 0);
  c[((i % mm) + mm) % mm] = coeff;
  return LinPoly(std::move(F), std::move(c), m);
}

LinPoly LinPoly::trace(TowerPtr F, int m) {
  int mm = resolve_m(*F, m);
  return LinPoly(std::move(F), std::vector<uint32_t>(mm, 1), m);
}

LinPoly LinPoly::from_sigma(TowerPtr F, const std::vector<uint32_t>& b, int s, int m) {
  int mm = resolve_m(*F, m);
  if (std::gcd(((s % mm) + mm) % mm, mm) != 1)
    throw Error(ErrorKind::SigmaNotGenerator, "gcd(" + std::to_string(s) + "," + std::to_string(mm) + ") != 1");
  std::vector<uint32_t> c(mm, 0);
  for (size_t j = 0; j < b.size(); ++j) {
    long long e = (static_cast<long long>(j) * s) % mm;
    if (e < 0) e += mm;
    c[e] = F->add(c[e], b[j]);
  }
  return LinPoly(std::move(F), std::move(c), m);
}

bool LinPoly::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](uint32_t a) { return a == 0; });
}

int LinPoly::q_degree() const {
  for (int i = m_ - 1; i >= 0; --i)
    if (c_[i]) return i;
  return -1;
}

int LinPoly::sigma_degree(int s) const {
  for (int j = m_ - 1; j >= 0; --j)
    if (sigma_coeff(j, s)) return j;
  return -1;
}

uint32_t LinPoly::eval(uint32_t a) const {
  uint32_t r = 0;
  for (int i = 0; i < m_; ++i)
    if (c_[i]) r = F_->add(r, F_->mul(c_[i], F_->frob(a, i)));
  return r;
}

LinPoly LinPoly::compose(const LinPoly& g) const {
  require_same(*this, g);
  std::vector<uint32_t> c(m_, 0);
  for (int i = 0; i < m_; ++i) {
    if (!c_[i]) continue;
    for (int j = 0; j < m_; ++j) {
      if (!g.c_[j]) continue;
      int e = (i + j) % m_;
      c[e] = F_->add(c[e], F_->mul(c_[i], F_->frob(g.c_[j], i)));
    }
  }
  return LinPoly(F_, std::move(c), m_);
}

LinPoly LinPoly::operator+(const LinPoly& g) const {
  require_same(*this, g);
  std::vector<uint32_t> c(m_);
  for (int i = 0; i < m_; ++i) c[i] = F_->add(c_[i], g.c_[i]);
  return LinPoly(F_, std::move(c), m_);
}

LinPoly LinPoly::operator-(const LinPoly& g) const {
  require_same(*this, g);
  std::vector<uint32_t> c(m_);
  for (int i = 0; i < m_; ++i) c[i] = F_->sub(c_[i], g.c_[i]);
  return LinPoly(F_, std::move(c), m_);
}

LinPoly LinPoly::scaled(uint32_t a) const {
  std::vector<uint32_t> c(m_);
  for (int i = 0; i < m_; ++i) c[i] = F_->mul(a, c_[i]);
  return LinPoly(F_, std::move(c), m_);
}

LinPoly LinPoly::adjoint() const {
  std::vector<uint32_t> c(m_, 0);
  for (int i = 0; i < m_; ++i) {
    int e = (m_ - i) % m_;
    c[e] = F_->frob(c_[i], e);
  }
  return LinPoly(F_, std::move(c), m_);
}

FqMatrix LinPoly::matrix() const {
  const auto& basis = F_->subfield_basis(m_);
  auto piv = basis_pivots(*F_, m_);
  FqMatrix M(m_, m_);
  for (int j = 0; j < m_; ++j) {
    uint32_t img = eval(basis[j]);
    for (int r = 0; r < m_; ++r) M.at(r, j) = F_->coord(img, piv[r]);
  }
  return M;
}

Subspace LinPoly::kernel_space() const {
  const auto& basis = F_->subfield_basis(m_);
  FqMatrix ns = F_->nullspace(matrix());
  std::vector<uint32_t> gens;
  for (int r = 0; r < ns.rows; ++r) {
    uint32_t e = 0;
    for (int j = 0; j < m_; ++j) e = F_->add(e, F_->mul(ns.at(r, j), basis[j]));
    gens.push_back(e);
  }
  return Subspace::span(F_, gens);
}

Subspace LinPoly::image_space() const {
  std::vector<uint32_t> gens;
  for (uint32_t b : F_->subfield_basis(m_)) gens.push_back(eval(b));
  return Subspace::span(F_, gens);
}

ScatterResult is_scattered(const LinPoly& f, Exec ex) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "is_scattered of the zero polynomial");
  const auto& F = *f.tower();
  const int m = f.m();
  const auto& basis = F.subfield_basis(m);
  const auto piv = basis_pivots(F, m);
  const auto& elems = F.subfield_elements(m);
  std::vector<uint32_t> img(m);
  for (int j = 0; j < m; ++j) img[j] = f.eval(basis[j]);
  auto kdim = [&](uint32_t mu) {
    FqMatrix M(m, m);
    for (int j = 0; j < m; ++j) {
      uint32_t v = F.sub(img[j], F.mul(mu, basis[j]));
      for (int r = 0; r < m; ++r) M.at(r, j) = F.coord(v, piv[r]);
    }
    return m - F.rank(std::move(M));
  };
  const long long total = static_cast<long long>(elems.size());
  long long best = total;
  if (ex == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 64) reduction(min : best) num_threads(threads())
    for (long long i = 0; i < total; ++i)
      if (i < best && kdim(elems[i]) >= 2) best = std::min(best, i);
  } else {
    for (long long i = 0; i < total; ++i)
      if (kdim(elems[i]) >= 2) {
        best = i;
        break;
      }
  }
  ScatterResult r;
  if (best < total) {
    r.scattered = false;
    r.witness = elems[best];
    r.witness_dim = kdim(elems[best]);
  }
  return r;
}

uint64_t ratio_image_size(const LinPoly& f, Exec ex) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "ratio image of the zero polynomial");
  const auto& F = *f.tower();
  const auto& elems = F.subfield_elements(f.m());
  const long long total = static_cast<long long>(elems.size());
  std::vector<uint8_t> seen(F.size(), 0);
  if (ex == Exec::Parallel) {
    const int nt = threads();
    std::vector<std::vector<uint8_t>> local(nt, std::vector<uint8_t>(F.size(), 0));
#pragma omp parallel for schedule(static) num_threads(nt)
    for (long long i = 1; i < total; ++i) {
      uint32_t x = elems[i];
      local[omp_get_thread_num()][F.div(f.eval(x), x)] = 1;
    }
    for (const auto& l : local)
      for (size_t i = 0; i < l.size(); ++i) seen[i] |= l[i];
  } else {
    for (long long i = 1; i < total; ++i) {
      uint32_t x = elems[i];
      seen[F.div(f.eval(x), x)] = 1;
    }
  }
  return static_cast<uint64_t>(std::count(seen.begin(), seen.end(), uint8_t{1}));
}

GowCheck gow_check(const LinPoly& f, int s) {
  GowCheck g;
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Gow check of the zero polynomial");
  const auto& F = *f.tower();
  const int m = f.m();
  g.k = f.sigma_degree(s);
  g.kernel_dim = f.kernel_space().dim();
  g.bound_ok = g.kernel_dim <= g.k;
  g.equality = g.kernel_dim == g.k;
  if (g.equality) {
    uint32_t n0 = subfield_norm(F, m, f.sigma_coeff(0, s));
    uint32_t nk = subfield_norm(F, m, f.sigma_coeff(g.k, s));
    if ((static_cast<long long>(m) * g.k) % 2) nk = F.neg(nk);
    g.norm_ok = n0 == nk;
  }
  return g;
}

}  // namespace linset
