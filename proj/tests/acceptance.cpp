// One PASS/FAIL line per acceptance criterion.  Exit status is nonzero if any line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "linset/census.hpp"
#include "linset/suites.hpp"

using namespace linset;

namespace {

using Clock = std::chrono::steady_clock;

struct Tally {
  bool ok = true;
  uint64_t passed = 0, total = 0;
  std::vector<std::string> issues;

  void take(const SuiteReport& r, const std::function<bool(const Check&)>& want = {}) {
    for (const auto& c : r.checks) {
      if (want && !want(c)) continue;
      passed += c.passed;
      total += c.total;
      if (!c.ok()) {
        ok = false;
        issues.push_back(r.suite + "(q=" + std::to_string(r.q) + ",n=" + std::to_string(r.n) + "): " + c.name + " " +
                         std::to_string(c.passed) + "/" + std::to_string(c.total));
      }
    }
  }
  void require(bool cond, const std::string& what) {
    ++total;
    if (cond) {
      ++passed;
    } else {
      ok = false;
      issues.push_back(what);
    }
  }
};

SuiteReport run(const std::string& suite, uint64_t q, int n, int samples = 0) {
  SuiteParams p;
  p.q = q;
  p.n = n;
  p.samples = samples;
  return run_suite(suite, p);
}

bool has_note(const SuiteReport& r, const std::string& part) {
  for (const auto& c : r.checks)
    for (const auto& n : c.notes)
      if (n.find(part) != std::string::npos) return true;
  return false;
}

const Check* find_check(const SuiteReport& r, const std::string& prefix) {
  for (const auto& c : r.checks)
    if (c.name.rfind(prefix, 0) == 0) return &c;
  return nullptr;
}

int failures = 0;

void report(int id, const std::string& title, double limit_s, const std::function<std::string(Tally&)>& body) {
  Tally t;
  auto start = Clock::now();
  std::string detail;
  try {
    detail = body(t);
  } catch (const std::exception& e) {
    t.ok = false;
    t.issues.push_back(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs >= limit_s) {
    t.ok = false;
    t.issues.push_back("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s");
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", secs);
  std::cout << "C" << id << " " << (t.ok ? "PASS" : "FAIL") << " " << title << ": " << t.passed << "/" << t.total
            << " checks, " << buf << " s";
  if (!detail.empty()) std::cout << "; " << detail;
  for (const auto& i : t.issues) std::cout << "; " << i;
  std::cout << std::endl;
  failures += !t.ok;
}

const std::vector<std::pair<uint64_t, int>> kFields{{2, 4}, {3, 4}, {2, 6}, {4, 3}};

}  // namespace

int main() {
  report(1, "dual bases", 10, [](Tally& t) {
    for (auto [q, n] : kFields) t.take(run("dualbases", q, n, 50));
    return std::string("50 random bases per field, closed forms on every matching minimal polynomial");
  });

  report(2, "projection polynomials", 30, [](Tally& t) {
    for (auto [q, n] : kFields) t.take(run("projections", q, n, 25));
    return std::string("25 direct sums per field");
  });

  report(3, "weight identities", 60, [](Tally& t) {
    for (auto [q, n] : kFields) t.take(run("weights", q, n));
    return std::string("random subspaces of every rank, graphs and all constructions");
  });

  report(4, "Gow bound", 60, [](Tally& t) {
    auto a = run("gow", 2, 4), b = run("gow", 3, 4);
    t.take(a);
    t.take(b);
    t.require(has_note(a, "exhaustive over sigma-degree <= 2"), "q=2,n=4 not exhaustive");
    const Check* c = find_check(b, "dim ker");
    t.require(c && c->total == 2000, "q=3,n=4 needs 1000 samples for each s in {1,3}");
    return std::string("exhaustive at q=2,n=4; 1000 samples per s at q=3,n=4");
  });

  report(5, "scatteredness oracles", 60, [](Tally& t) {
    for (auto [q, n] : kFields) {
      auto r = run("scattered", q, n, 200);
      t.take(r);
      const Check* tb = find_check(r, "monomial and LP");
      t.require(tb && tb->total > 0, "no monomial or LP instance at q=" + std::to_string(q));
    }
    return std::string("200 random polynomials per field plus the monomial and LP rows");
  });

  report(6, "two-weight constructions", 10, [](Tally& t) {
    auto r = run("two-weight", 3, 4);
    t.take(r);
    for (auto name : {"ex1 with f", "ex2 with s", "conditions"}) {
      const Check* c = find_check(r, name);
      t.require(c && c->total > 0, std::string("missing check ") + name);
    }
    return std::string("size 34 with N_2 = 2 and N_1 = 32; 33 would break N_1 + N_2 = 34");
  });

  report(7, "minimum-size polynomials", 60, [](Tally& t) {
    for (auto [q, n] : std::vector<std::pair<uint64_t, int>>{{2, 4}, {3, 4}, {2, 6}}) t.take(run("minsize", q, n));
    return std::string("every t in [1, n) at (2,4), (3,4), (2,6)");
  });

  report(8, "PG(1,q^4) catalog", 60, [](Tally& t) {
    t.take(run("appendix-q4", 2, 4));
    t.take(run("appendix-q4", 3, 4));
    return std::string("all eight families at q = 2 and q = 3");
  });

  report(9, "exhaustive rank-4 scan of F_16^2", 1800, [](Tally& t) {
    auto r = run("exhaustive-n4", 2, 4);
    t.take(r);
    auto F = tower_for(2, 4);
    auto s0 = Clock::now();
    auto serial = rank_census(F, 4, Exec::Serial);
    double ts = std::chrono::duration<double>(Clock::now() - s0).count();
    auto p0 = Clock::now();
    auto par = rank_census(F, 4, Exec::Parallel);
    double tp = std::chrono::duration<double>(Clock::now() - p0).count();
    t.require(serial.subspaces == 200787, "serial scan count");
    t.require(serial.sizes == par.sizes && serial.spectra == par.spectra && serial.two_heavy == par.two_heavy,
              "serial and parallel scans differ");
    t.require(ts < 1800, "serial scan over 30 min");
    std::ostringstream o;
    o.precision(2);
    o << std::fixed << "200787 subspaces; sizes 5, 9, 11, 13, 15 plus " << serial.single_point
      << " single points <v>_{F_16} (weight 4); " << serial.two_heavy
      << " sets with two heavy points, all of weight 2; serial " << ts << " s, parallel " << tp << " s";
    return o.str();
  });

  report(10, "equivalence", 600, [](Tally& t) {
    auto r = run("equivalence", 2, 4);
    t.take(r);
    const Check* cb = find_check(r, "criteria agree");
    t.require(cb && cb->total == 20 && cb->notes.empty(), "criteria vs brute force on 20 pairs");
    return std::string("Singer form rebuilds all 5760 elements of GL(2,9) for each "
                       "of 36 quadratics; criteria = brute on 20 pairs; 51200-map scan finds no equivalence at q=3,t=2");
  });

  report(11, "duality", 10, [](Tally& t) {
    t.take(run("duality", 2, 4, 10));
    return std::string("10 random (T, S) at q=2,n=4");
  });

  return failures ? 1 : 0;
}
