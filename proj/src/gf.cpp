#include "linset/gf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace linset {

const char* error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonPrime: return "NonPrime";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotADivisor: return "NotADivisor";
    case ErrorKind::TowerMismatch: return "TowerMismatch";
    case ErrorKind::SigmaNotGenerator: return "SigmaNotGenerator";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::SingularMoore: return "SingularMoore";
    case ErrorKind::NotPrimitivePolynomialBasis: return "NotPrimitivePolynomialBasis";
    case ErrorKind::MinPolyMismatch: return "MinPolyMismatch";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::ZeroSubspace: return "ZeroSubspace";
    case ErrorKind::RankOverflow: return "RankOverflow";
    case ErrorKind::NotDirectSum: return "NotDirectSum";
    case ErrorKind::NotScattered: return "NotScattered";
    case ErrorKind::BadXi: return "BadXi";
    case ErrorKind::NormConditionFailed: return "NormConditionFailed";
    case ErrorKind::NoParameterFound: return "NoParameterFound";
    case ErrorKind::PreconditionUniqueWeightFailed: return "PreconditionUniqueWeightFailed";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorKind::SingularInput: return "SingularInput";
    case ErrorKind::TTooSmall: return "TTooSmall";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

bool is_prime(long long v) {
  if (v < 2) return false;
  for (long long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

std::optional<std::pair<int, int>> prime_power(long long q) {
  if (q < 2) return std::nullopt;
  long long p = 2;
  while (q % p != 0) ++p;
  int h = 0;
  long long r = q;
  while (r % p == 0) {
    r /= p;
    ++h;
  }
  if (r != 1) return std::nullopt;
  return std::pair<int, int>{static_cast<int>(p), h};
}

namespace {

std::vector<long long> prime_factors(long long v) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

// Scalar operations for the generic polynomial routines below.
struct PrimeOps {
  int p;
  uint32_t count() const { return static_cast<uint32_t>(p); }
  uint32_t add(uint32_t a, uint32_t b) const { return (a + b) % p; }
  uint32_t sub(uint32_t a, uint32_t b) const { return (a + p - b) % p; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
  }
};

struct FqOps {
  const FieldTower& F;
  uint32_t count() const { return F.q(); }
  uint32_t add(uint32_t a, uint32_t b) const { return F.fq_add(a, b); }
  uint32_t sub(uint32_t a, uint32_t b) const { return F.fq_sub(a, b); }
  uint32_t mul(uint32_t a, uint32_t b) const { return F.fq_mul(a, b); }
};

// Remainder of f modulo a monic g (both little-endian, leading coeff last).
template <class Ops>
std::vector<uint32_t> poly_mod(const Ops& ops, std::vector<uint32_t> f, const std::vector<uint32_t>& g) {
  const int dg = static_cast<int>(g.size()) - 1;
  for (int d = static_cast<int>(f.size()) - 1; d >= dg; --d) {
    uint32_t c = f[d];
    if (c == 0) continue;
    for (int i = 0; i <= dg; ++i) f[d - dg + i] = ops.sub(f[d - dg + i], ops.mul(c, g[i]));
  }
  f.resize(std::max(dg, 0));
  return f;
}

template <class Ops>
std::optional<std::vector<uint32_t>> find_factor(const Ops& ops, const std::vector<uint32_t>& f) {
  const int deg = static_cast<int>(f.size()) - 1;
  const uint64_t base = ops.count();
  for (int d = 1; 2 * d <= deg; ++d) {
    uint64_t total = 1;
    for (int i = 0; i < d; ++i) total *= base;
    for (uint64_t m = 0; m < total; ++m) {
      std::vector<uint32_t> g(d + 1);
      uint64_t r = m;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<uint32_t>(r % base);
        r /= base;
      }
      g[d] = 1;
      auto rem = poly_mod(ops, f, g);
      if (std::all_of(rem.begin(), rem.end(), [](uint32_t c) { return c == 0; })) return g;
    }
  }
  return std::nullopt;
}

std::string poly_witness(const std::vector<uint32_t>& g) {
  std::string s = "[";
  for (size_t i = 0; i < g.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(g[i]);
  }
  return s + "]";
}

}  // namespace

std::optional<std::vector<uint32_t>> find_factor_over_fq(const FieldTower& F, const std::vector<uint32_t>& poly) {
  return find_factor(FqOps{F}, poly);
}

std::shared_ptr<const FieldTower> FieldTower::make(const TowerSpec& spec) {
  std::shared_ptr<FieldTower> t(new FieldTower());
  t->build(spec);
  return t;
}

std::shared_ptr<const FieldTower> FieldTower::make(int p, int h, int n) {
  TowerSpec s;
  s.p = p;
  s.h = h;
  s.n = n;
  return make(s);
}

void FieldTower::build(const TowerSpec& spec) {
  if (!is_prime(spec.p)) throw Error(ErrorKind::NonPrime, std::to_string(spec.p) + " is not prime");
  if (spec.h < 1) throw Error(ErrorKind::InvalidArgument, "h must be >= 1");
  if (spec.n < 2) throw Error(ErrorKind::InvalidArgument, "n must be >= 2");
  p_ = spec.p;
  h_ = spec.h;
  n_ = spec.n;

  uint64_t q = 1;
  for (int i = 0; i < h_; ++i) {
    q *= static_cast<uint64_t>(p_);
    if (q > (uint64_t{1} << 31)) throw Error(ErrorKind::TooLarge, "q too large");
  }
  uint64_t size = 1;
  for (int i = 0; i < n_; ++i) {
    size *= q;
    if (size > (uint64_t{1} << 31)) throw Error(ErrorKind::TooLarge, "q^n exceeds 2^31");
  }
  if (size > kDeskScaleLimit && !spec.allow_large)
    throw Error(ErrorKind::TooLarge, "q^n = " + std::to_string(size) + " exceeds the desk-scale limit 2^24");
  q_ = static_cast<uint32_t>(q);
  size_ = static_cast<uint32_t>(size);

  ppow_.assign(h_ * n_ + 1, 1);
  for (int j = 1; j <= h_ * n_; ++j) ppow_[j] = ppow_[j - 1] * static_cast<uint32_t>(p_);
  qpow_.assign(n_ + 1, 1);
  for (int i = 1; i <= n_; ++i) qpow_[i] = qpow_[i - 1] * q_;

  // Base modulus over F_p.
  PrimeOps pops{p_};
  if (spec.base_modulus) {
    const auto& bm = *spec.base_modulus;
    if (static_cast<int>(bm.size()) != h_ + 1 || bm.back() != 1)
      throw Error(ErrorKind::InvalidArgument, "base modulus must be monic of degree h");
    std::vector<uint32_t> f;
    for (int c : bm) {
      if (c < 0 || c >= p_) throw Error(ErrorKind::InvalidArgument, "base modulus coefficient out of range");
      f.push_back(static_cast<uint32_t>(c));
    }
    if (h_ > 1 && f[0] == 0)
      throw Error(ErrorKind::ReducibleModulus, "base modulus divisible by x", poly_witness({0, 1}));
    if (auto g = find_factor(pops, f))
      throw Error(ErrorKind::ReducibleModulus, "base modulus has factor " + poly_witness(*g), poly_witness(*g));
    base_mod_ = bm;
  } else {
    for (uint64_t m = 0; m < q; ++m) {
      std::vector<uint32_t> f(h_ + 1);
      uint64_t r = m;
      for (int i = 0; i < h_; ++i) {
        f[i] = static_cast<uint32_t>(r % p_);
        r /= p_;
      }
      f[h_] = 1;
      if (h_ > 1 && f[0] == 0) continue;
      if (find_factor(pops, f)) continue;
      base_mod_.assign(f.begin(), f.end());
      break;
    }
  }

  // F_q tables.
  if (p_ != 2 && q_ <= 256) {
    fq_add_.assign(static_cast<size_t>(q_) * q_, 0);
    for (uint32_t a = 0; a < q_; ++a)
      for (uint32_t b = 0; b < q_; ++b) {
        uint32_t r = 0;
        for (int j = 0; j < h_; ++j) {
          uint32_t da = (a / ppow_[j]) % p_, db = (b / ppow_[j]) % p_;
          r += ((da + db) % p_) * ppow_[j];
        }
        fq_add_[static_cast<size_t>(a) * q_ + b] = r;
      }
  }
  {
    fq_log_.assign(q_, 0);
    fq_exp_.assign(q_, 0);
    const auto factors = prime_factors(static_cast<long long>(q_) - 1);
    auto fq_pow_ref = [&](uint32_t a, uint64_t e) {
      uint32_t r = 1;
      while (e) {
        if (e & 1) r = fq_mul_reference(r, a);
        a = fq_mul_reference(a, a);
        e >>= 1;
      }
      return r;
    };
    uint32_t g = 1;
    if (q_ > 2) {
      for (g = 2; g < q_; ++g) {
        bool prim = true;
        for (auto r : factors)
          if (fq_pow_ref(g, (q_ - 1) / r) == 1) {
            prim = false;
            break;
          }
        if (prim) break;
      }
    }
    uint32_t x = 1;
    for (uint32_t k = 0; k + 1 < q_; ++k) {
      fq_exp_[k] = x;
      fq_log_[x] = k;
      x = fq_mul_reference(x, g);
    }
  }

  // Extension modulus over F_q.
  FqOps qops{*this};
  if (spec.ext_modulus) {
    const auto& em = *spec.ext_modulus;
    if (static_cast<int>(em.size()) != n_ + 1)
      throw Error(ErrorKind::InvalidArgument, "extension modulus must have degree n");
    std::vector<uint32_t> f;
    for (const auto& c : em) {
      if (static_cast<int>(c.size()) > h_) throw Error(ErrorKind::InvalidArgument, "F_q coefficient too long");
      uint32_t v = 0;
      for (size_t j = 0; j < c.size(); ++j) {
        if (c[j] < 0 || c[j] >= p_) throw Error(ErrorKind::InvalidArgument, "coefficient digit out of range");
        v += static_cast<uint32_t>(c[j]) * ppow_[j];
      }
      f.push_back(v);
    }
    if (f.back() != 1) throw Error(ErrorKind::InvalidArgument, "extension modulus must be monic");
    if (auto g = find_factor(qops, f))
      throw Error(ErrorKind::ReducibleModulus, "extension modulus has factor " + poly_witness(*g), poly_witness(*g));
    ext_mod_ = f;
  } else {
    const uint64_t total = size_;
    for (uint64_t m = 0; m < total; ++m) {
      std::vector<uint32_t> f(n_ + 1);
      uint64_t r = m;
      for (int i = 0; i < n_; ++i) {
        f[i] = static_cast<uint32_t>(r % q_);
        r /= q_;
      }
      f[n_] = 1;
      if (f[0] == 0) continue;
      if (find_factor(qops, f)) continue;
      ext_mod_ = f;
      break;
    }
  }

  // Log/exp tables of F_{q^n}.
  {
    const uint64_t M = size_ - 1;
    const auto factors = prime_factors(static_cast<long long>(M));
    auto pow_ref = [&](uint32_t a, uint64_t e) {
      uint32_t r = 1;
      while (e) {
        if (e & 1) r = mul_reference(r, a);
        a = mul_reference(a, a);
        e >>= 1;
      }
      return r;
    };
    uint32_t g = 2;
    for (; g < size_; ++g) {
      bool prim = true;
      for (auto r : factors)
        if (pow_ref(g, M / r) == 1) {
          prim = false;
          break;
        }
      if (prim) break;
    }
    if (g >= size_) throw Error(ErrorKind::ReducibleModulus, "no element of order q^n-1");
    gen_ = g;
    // x -> x*g is F_q-linear: tabulate it on chunks of base-q digits.
    int chunk = 1;
    while (chunk < n_ && std::pow(double(q_), chunk + 1) <= 4096) ++chunk;
    std::vector<uint32_t> starts;
    std::vector<std::vector<uint32_t>> tabs;
    for (int j = 0; j < n_; j += chunk) {
      int c = std::min(chunk, n_ - j);
      uint32_t span = qpow_[j + c] / qpow_[j];
      std::vector<uint32_t> tab(span);
      for (uint32_t v = 0; v < span; ++v) tab[v] = mul_reference(v * qpow_[j], g);
      starts.push_back(j);
      tabs.push_back(std::move(tab));
    }
    auto times_g = [&](uint32_t x) {
      uint32_t r = 0;
      for (size_t i = 0; i < tabs.size(); ++i) {
        uint32_t dig = (x / qpow_[starts[i]]) % static_cast<uint32_t>(tabs[i].size());
        if (dig) r = add(r, tabs[i][dig]);
      }
      return r;
    };
    log_.assign(size_, std::numeric_limits<uint32_t>::max());
    exp_.assign(M, 0);
    uint32_t x = 1;
    for (uint64_t k = 0; k < M; ++k) {
      if (log_[x] != std::numeric_limits<uint32_t>::max())
        throw Error(ErrorKind::ReducibleModulus, "generator order is a proper divisor of q^n-1");
      exp_[k] = x;
      log_[x] = static_cast<uint32_t>(k);
      x = times_g(x);
    }
    if (x != 1) throw Error(ErrorKind::ReducibleModulus, "generator order does not divide q^n-1");
    qpow_mod_.assign(n_ + 1, 1);
    for (int i = 1; i <= n_; ++i) qpow_mod_[i] = (qpow_mod_[i - 1] * q_) % M;
    ppow_mod_.assign(h_ * n_ + 1, 1);
    for (int e = 1; e <= h_ * n_; ++e) ppow_mod_[e] = (ppow_mod_[e - 1] * p_) % M;
  }

  frob_mat_.clear();
  for (int i = 0; i < n_; ++i) {
    FqMatrix m(n_, n_);
    for (int j = 0; j < n_; ++j) {
      uint32_t img = frob(qpow_[j], i);
      for (int r = 0; r < n_; ++r) m.at(r, j) = coord(img, r);
    }
    frob_mat_.push_back(std::move(m));
  }

  for (int t : divisors_of_n()) {
    FqMatrix m = frob_mat_[t % n_];
    for (int i = 0; i < n_; ++i) m.at(i, i) = fq_sub(m.at(i, i), 1);
    FqMatrix ns = nullspace(m);
    rref(ns);
    std::vector<uint32_t> basis;
    for (int r = 0; r < ns.rows; ++r) basis.push_back(from_coords(ns.row(r)));
    std::vector<uint32_t> elems{0};
    for (uint32_t b : basis) {
      std::vector<uint32_t> next;
      next.reserve(elems.size() * q_);
      for (uint32_t c = 0; c < q_; ++c) {
        uint32_t cb = mul(c, b);
        for (uint32_t e : elems) next.push_back(add(e, cb));
      }
      elems.swap(next);
    }
    std::sort(elems.begin(), elems.end());
    sub_basis_[t] = std::move(basis);
    sub_elems_[t] = std::move(elems);
  }
}

std::vector<std::vector<int>> FieldTower::ext_modulus_digits() const {
  std::vector<std::vector<int>> out;
  for (uint32_t c : ext_mod_) out.push_back(fq_digits(c));
  return out;
}

std::vector<int> FieldTower::fq_digits(uint32_t a) const {
  std::vector<int> d(h_);
  for (int j = 0; j < h_; ++j) d[j] = static_cast<int>((a / ppow_[j]) % p_);
  return d;
}

uint32_t FieldTower::fq_add(uint32_t a, uint32_t b) const {
  if (p_ == 2) return a ^ b;
  if (!fq_add_.empty()) return fq_add_[static_cast<size_t>(a) * q_ + b];
  uint32_t r = 0;
  for (int j = 0; j < h_; ++j) {
    uint32_t da = (a / ppow_[j]) % p_, db = (b / ppow_[j]) % p_;
    r += ((da + db) % p_) * ppow_[j];
  }
  return r;
}

uint32_t FieldTower::fq_neg(uint32_t a) const {
  if (p_ == 2) return a;
  uint32_t r = 0;
  for (int j = 0; j < h_; ++j) {
    uint32_t d = (a / ppow_[j]) % p_;
    r += ((p_ - d) % p_) * ppow_[j];
  }
  return r;
}

uint32_t FieldTower::fq_sub(uint32_t a, uint32_t b) const { return fq_add(a, fq_neg(b)); }

uint32_t FieldTower::fq_inv(uint32_t a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero in F_q");
  uint32_t l = fq_log_[a];
  return fq_exp_[l == 0 ? 0 : (q_ - 1) - l];
}

uint32_t FieldTower::fq_from_int(long long v) const {
  long long r = v % p_;
  if (r < 0) r += p_;
  return static_cast<uint32_t>(r);
}

uint32_t FieldTower::fq_mul_reference(uint32_t a, uint32_t b) const {
  std::vector<uint32_t> x(h_), y(h_), z(2 * h_, 0);
  for (int j = 0; j < h_; ++j) {
    x[j] = (a / ppow_[j]) % p_;
    y[j] = (b / ppow_[j]) % p_;
  }
  for (int i = 0; i < h_; ++i)
    for (int j = 0; j < h_; ++j) z[i + j] = (z[i + j] + x[i] * y[j]) % p_;
  for (int d = 2 * h_ - 1; d >= h_; --d) {
    uint32_t c = z[d];
    if (!c) continue;
    for (int i = 0; i <= h_; ++i)
      z[d - h_ + i] = (z[d - h_ + i] + (p_ - c) * static_cast<uint32_t>(base_mod_[i])) % p_;
  }
  uint32_t r = 0;
  for (int j = 0; j < h_; ++j) r += z[j] * ppow_[j];
  return r;
}

uint32_t FieldTower::add_digits(uint32_t a, uint32_t b, bool subtract) const {
  uint32_t r = 0;
  for (int i = 0; i < n_; ++i) {
    uint32_t da = (a / qpow_[i]) % q_, db = (b / qpow_[i]) % q_;
    r += (subtract ? fq_sub(da, db) : fq_add(da, db)) * qpow_[i];
  }
  return r;
}

uint32_t FieldTower::neg(uint32_t a) const {
  if (p_ == 2) return a;
  uint32_t r = 0;
  for (int i = 0; i < n_; ++i) r += fq_neg((a / qpow_[i]) % q_) * qpow_[i];
  return r;
}

uint32_t FieldTower::mul_reference(uint32_t a, uint32_t b) const {
  std::vector<uint32_t> x(n_), y(n_), z(2 * n_, 0);
  for (int i = 0; i < n_; ++i) {
    x[i] = coord(a, i);
    y[i] = coord(b, i);
  }
  for (int i = 0; i < n_; ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < n_; ++j) z[i + j] = fq_add(z[i + j], fq_mul(x[i], y[j]));
  }
  for (int d = 2 * n_ - 1; d >= n_; --d) {
    uint32_t c = z[d];
    if (!c) continue;
    for (int i = 0; i <= n_; ++i) z[d - n_ + i] = fq_sub(z[d - n_ + i], fq_mul(c, ext_mod_[i]));
  }
  uint32_t r = 0;
  for (int i = 0; i < n_; ++i) r += z[i] * qpow_[i];
  return r;
}

uint32_t FieldTower::inv(uint32_t a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : (size_ - 1) - l];
}

uint32_t FieldTower::pow(uint32_t a, int64_t e) const {
  if (a == 0) {
    if (e > 0) return 0;
    if (e == 0) return 1;
    throw Error(ErrorKind::DivisionByZero, "negative power of zero");
  }
  const int64_t M = static_cast<int64_t>(size_) - 1;
  int64_t em = e % M;
  if (em < 0) em += M;
  return exp_[(static_cast<uint64_t>(log_[a]) * static_cast<uint64_t>(em)) % M];
}

uint32_t FieldTower::frob(uint32_t a, int i) const {
  if (a == 0) return 0;
  int k = ((i % n_) + n_) % n_;
  return exp_[(static_cast<uint64_t>(log_[a]) * qpow_mod_[k]) % (size_ - 1)];
}

uint32_t FieldTower::aut(uint32_t a, int e) const {
  if (a == 0) return 0;
  const int hn = h_ * n_;
  int k = ((e % hn) + hn) % hn;
  return exp_[(static_cast<uint64_t>(log_[a]) * ppow_mod_[k]) % (size_ - 1)];
}

uint32_t FieldTower::log(uint32_t a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "log of zero");
  return log_[a];
}

uint32_t FieldTower::from_coords(std::span<const uint32_t> c) const {
  uint32_t r = 0;
  for (int i = 0; i < n_; ++i) r += c[i] * qpow_[i];
  return r;
}

void FieldTower::to_coords(uint32_t a, std::span<uint32_t> out) const {
  for (int i = 0; i < n_; ++i) {
    out[i] = a % q_;
    a /= q_;
  }
}

std::vector<int> FieldTower::divisors_of_n() const {
  std::vector<int> d;
  for (int t = 1; t <= n_; ++t)
    if (n_ % t == 0) d.push_back(t);
  return d;
}

uint32_t FieldTower::trace(uint32_t a, int t) const {
  if (!divides_n(t)) throw Error(ErrorKind::NotADivisor, std::to_string(t) + " does not divide n");
  uint32_t r = 0;
  for (int i = 0; i < n_ / t; ++i) r = add(r, frob(a, t * i));
  return r;
}

uint32_t FieldTower::norm(uint32_t a, int t) const {
  if (!divides_n(t)) throw Error(ErrorKind::NotADivisor, std::to_string(t) + " does not divide n");
  if (a == 0) return 0;
  const uint64_t M = size_ - 1;
  uint64_t e = 0;
  for (int i = 0; i < n_ / t; ++i) e = (e + qpow_mod_[t * i]) % M;
  return exp_[(static_cast<uint64_t>(log_[a]) * e) % M];
}

bool FieldTower::in_subfield(uint32_t a, int t) const {
  if (!divides_n(t)) throw Error(ErrorKind::NotADivisor, std::to_string(t) + " does not divide n");
  return frob(a, t) == a;
}

const std::vector<uint32_t>& FieldTower::subfield_basis(int t) const {
  auto it = sub_basis_.find(t);
  if (it == sub_basis_.end()) throw Error(ErrorKind::NotADivisor, std::to_string(t) + " does not divide n");
  return it->second;
}

const std::vector<uint32_t>& FieldTower::subfield_elements(int t) const {
  auto it = sub_elems_.find(t);
  if (it == sub_elems_.end()) throw Error(ErrorKind::NotADivisor, std::to_string(t) + " does not divide n");
  return it->second;
}

std::vector<uint32_t> FieldTower::min_poly(uint32_t a) const {
  std::vector<uint32_t> conj{a};
  for (uint32_t c = frob(a, 1); c != a; c = frob(c, 1)) conj.push_back(c);
  std::vector<uint32_t> poly{1};
  for (uint32_t c : conj) {
    std::vector<uint32_t> next(poly.size() + 1, 0);
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = add(next[i + 1], poly[i]);
      next[i] = sub(next[i], mul(poly[i], c));
    }
    poly.swap(next);
  }
  for (uint32_t c : poly)
    if (c >= q_) throw Error(ErrorKind::VerificationFailed, "minimal polynomial coefficient outside F_q");
  return poly;
}

std::vector<Fe> FieldTower::all_elements() const {
  std::vector<Fe> v;
  v.reserve(size_);
  for (uint32_t i = 0; i < size_; ++i) v.emplace_back(this, i);
  return v;
}

RrefInfo FieldTower::rref(FqMatrix& m) const {
  RrefInfo info;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    uint32_t inv = fq_inv(m.at(r, c));
    if (inv != 1)
      for (int j = c; j < m.cols; ++j) m.at(r, j) = fq_mul(m.at(r, j), inv);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      uint32_t f = m.at(i, c);
      if (!f) continue;
      for (int j = c; j < m.cols; ++j) m.at(i, j) = fq_sub(m.at(i, j), fq_mul(f, m.at(r, j)));
    }
    info.pivots.push_back(c);
    ++r;
  }
  info.rank = r;
  return info;
}

FqMatrix FieldTower::nullspace(const FqMatrix& m) const {
  FqMatrix w = m;
  RrefInfo info = rref(w);
  std::vector<bool> is_piv(m.cols, false);
  for (int c : info.pivots) is_piv[c] = true;
  FqMatrix out(m.cols - info.rank, m.cols);
  int k = 0;
  for (int f = 0; f < m.cols; ++f) {
    if (is_piv[f]) continue;
    out.at(k, f) = 1;
    for (int r = 0; r < info.rank; ++r) out.at(k, info.pivots[r]) = fq_neg(w.at(r, f));
    ++k;
  }
  return out;
}

// ---- Fe ----

namespace {
const FieldTower* pick(const Fe& a, const Fe& b) {
  const FieldTower* ta = a.tower();
  const FieldTower* tb = b.tower();
  if (ta && tb && ta != tb) throw Error(ErrorKind::TowerMismatch, "operands from different towers");
  return ta ? ta : tb;
}
}  // namespace

Fe operator+(Fe a, Fe b) {
  auto* F = pick(a, b);
  if (!F) return Fe();
  return Fe(F, F->add(a.index(), b.index()));
}
Fe operator-(Fe a, Fe b) {
  auto* F = pick(a, b);
  if (!F) return Fe();
  return Fe(F, F->sub(a.index(), b.index()));
}
Fe operator*(Fe a, Fe b) {
  auto* F = pick(a, b);
  if (!F) return Fe();
  return Fe(F, F->mul(a.index(), b.index()));
}
Fe operator/(Fe a, Fe b) {
  auto* F = pick(a, b);
  if (!F || b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  return Fe(F, F->div(a.index(), b.index()));
}
Fe operator-(Fe a) {
  if (!a.tower()) return a;
  return Fe(a.tower(), a.tower()->neg(a.index()));
}
Fe Fe::inv() const {
  if (!tower_ || v_ == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return Fe(tower_, tower_->inv(v_));
}
Fe Fe::pow(int64_t e) const {
  if (!tower_) {
    if (e > 0) return *this;
    throw Error(ErrorKind::DivisionByZero, "power of unbound zero");
  }
  return Fe(tower_, tower_->pow(v_, e));
}
Fe Fe::frob(int i) const { return tower_ ? Fe(tower_, tower_->frob(v_, i)) : *this; }
Fe Fe::aut(int e) const { return tower_ ? Fe(tower_, tower_->aut(v_, e)) : *this; }

}  // namespace linset
