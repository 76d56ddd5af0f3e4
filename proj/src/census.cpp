#include "linset/census.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>

#include "linset/linset.hpp"

namespace linset {

uint64_t gaussian_binomial(uint64_t q, int N, int k) {
  if (k < 0 || k > N) return 0;
  // [N, i+1] = [N, i] (q^{N-i} - 1) / (q^{i+1} - 1), exact at every step.
  uint64_t r = 1;
  for (int i = 0; i < k; ++i) {
    unsigned __int128 num = static_cast<unsigned __int128>(r) * (ipow(q, N - i) - 1);
    r = static_cast<uint64_t>(num / (ipow(q, i + 1) - 1));
  }
  return r;
}

std::vector<uint64_t> pg1q4_sizes(uint64_t q) {
  return {q * q + 1, q * q * q + q * q + q + 1, q * q * q + 1, q * q * q + q * q + 1, q * q * q + q * q - q + 1};
}

namespace {

struct Pattern {
  std::vector<int> pivots;
  std::vector<std::pair<int, int>> free;  // (row, column)
  uint64_t count = 0;
};

std::vector<Pattern> patterns(uint64_t q, int N, int k) {
  std::vector<Pattern> out;
  std::vector<int> piv(k);
  for (int i = 0; i < k; ++i) piv[i] = i;
  for (;;) {
    Pattern p;
    p.pivots = piv;
    for (int r = 0; r < k; ++r)
      for (int c = piv[r] + 1; c < N; ++c)
        if (!std::binary_search(piv.begin(), piv.end(), c)) p.free.emplace_back(r, c);
    p.count = ipow(q, static_cast<int>(p.free.size()));
    out.push_back(std::move(p));
    int i = k - 1;
    while (i >= 0 && piv[i] == N - k + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  return out;
}

struct Scratch {
  std::vector<uint32_t> coords;
  std::vector<Vec2> rows, members;
  std::vector<uint32_t> keys;
};

void visit(const FieldTower& F, int k, const Pattern& pat, uint64_t local, Scratch& s, Census& c) {
  const int n = F.n();
  const uint32_t q = F.q();
  s.rows.assign(k, Vec2{});
  s.coords.assign(static_cast<size_t>(k) * 2 * n, 0);
  for (int r = 0; r < k; ++r) s.coords[static_cast<size_t>(r) * 2 * n + pat.pivots[r]] = 1;
  for (auto [r, col] : pat.free) {
    s.coords[static_cast<size_t>(r) * 2 * n + col] = static_cast<uint32_t>(local % q);
    local /= q;
  }
  for (int r = 0; r < k; ++r) {
    const uint32_t* row = s.coords.data() + static_cast<size_t>(r) * 2 * n;
    s.rows[r] = {F.from_coords({row, static_cast<size_t>(n)}), F.from_coords({row + n, static_cast<size_t>(n)})};
  }
  s.members.assign(1, Vec2{});
  for (int r = 0; r < k; ++r) {
    size_t m = s.members.size();
    for (uint32_t a = 1; a < q; ++a)
      for (size_t i = 0; i < m; ++i)
        s.members.push_back({F.add(s.members[i].x, F.mul(a, s.rows[r].x)),
                             F.add(s.members[i].y, F.mul(a, s.rows[r].y))});
  }
  s.keys.clear();
  for (size_t i = 1; i < s.members.size(); ++i) s.keys.push_back(point_of(F, s.members[i]).key);
  std::sort(s.keys.begin(), s.keys.end());
  std::vector<uint64_t> N(k, 0);
  uint64_t size = 0, heavy = 0, heavy2 = 0;
  for (size_t i = 0; i < s.keys.size();) {
    size_t j = i;
    while (j < s.keys.size() && s.keys[j] == s.keys[i]) ++j;
    uint64_t cnt = j - i;
    int w = 0;
    for (uint64_t v = cnt + 1; v > 1; v /= q) ++w;
    ++N[w - 1];
    ++size;
    if (w > 1) {
      ++heavy;
      if (w == 2) ++heavy2;
    }
    i = j;
  }
  ++c.subspaces;
  ++c.sizes[size];
  ++c.spectra[N];
  if (size == 1) ++c.single_point;
  if (heavy == 2) {
    ++c.two_heavy;
    if (heavy2 != 2) ++c.two_heavy_not_2;
  }
}

void merge(Census& into, const Census& part) {
  into.subspaces += part.subspaces;
  for (auto& [k, v] : part.sizes) into.sizes[k] += v;
  for (auto& [k, v] : part.spectra) into.spectra[k] += v;
  into.single_point += part.single_point;
  into.two_heavy += part.two_heavy;
  into.two_heavy_not_2 += part.two_heavy_not_2;
}

}  // namespace

Census rank_census(const TowerPtr& Fp, int k, Exec ex, const std::function<void(uint64_t, uint64_t)>& progress) {
  const auto& F = *Fp;
  const int N = 2 * F.n();
  if (k < 1 || k > N) throw Error(ErrorKind::InvalidArgument, "rank must lie in [1, 2n]");
  const uint64_t total = gaussian_binomial(F.q(), N, k);
  if (total > kDeskScaleLimit * 16)
    throw Error(ErrorKind::TooLarge, std::to_string(total) + " subspaces exceed the desk-scale limit");
  auto pats = patterns(F.q(), N, k);
  std::vector<uint64_t> offset{0};
  for (auto& p : pats) offset.push_back(offset.back() + p.count);
  Census c;
  c.k = k;
  c.expected = total;
  const uint64_t chunk = 4096;
  const int64_t chunks = static_cast<int64_t>((offset.back() + chunk - 1) / chunk);
  auto run_chunk = [&](int64_t ch, Scratch& s, Census& part) {
    uint64_t lo = static_cast<uint64_t>(ch) * chunk, hi = std::min(offset.back(), lo + chunk);
    size_t pi = static_cast<size_t>(std::upper_bound(offset.begin(), offset.end(), lo) - offset.begin()) - 1;
    for (uint64_t g = lo; g < hi; ++g) {
      while (g >= offset[pi + 1]) ++pi;
      visit(F, k, pats[pi], g - offset[pi], s, part);
    }
    return hi - lo;
  };
  std::atomic<uint64_t> done{0};
  if (ex == Exec::Serial) {
    Scratch s;
    for (int64_t ch = 0; ch < chunks; ++ch) {
      done += run_chunk(ch, s, c);
      if (progress) progress(done, total);
    }
  } else {
#pragma omp parallel num_threads(threads())
    {
      Scratch s;
      Census part;
#pragma omp for schedule(dynamic, 1)
      for (int64_t ch = 0; ch < chunks; ++ch) {
        uint64_t d = done += run_chunk(ch, s, part);
        if (progress && omp_get_thread_num() == 0) progress(d, total);
      }
#pragma omp critical
      merge(c, part);
    }
  }
  return c;
}

}  // namespace linset
