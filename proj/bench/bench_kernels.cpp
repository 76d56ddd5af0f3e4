// Serial versus OpenMP timings for the heavy kernels.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>

#include "linset/census.hpp"
#include "linset/equiv.hpp"
#include "linset/sample.hpp"
#include "linset/suites.hpp"

using namespace linset;

namespace {

double best_of(int reps, const std::function<void()>& fn) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto s = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - s).count());
  }
  return best;
}

void row(const char* name, int reps, const std::function<void(Exec)>& fn) {
  double s = best_of(reps, [&] { fn(Exec::Serial); });
  double p = best_of(reps, [&] { fn(Exec::Parallel); });
  std::printf("%-34s %10.4f %10.4f %7.2fx\n", name, s, p, p > 0 ? s / p : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linset kernel benchmarks"};
  int reps = 3, nthreads = 0;
  app.add_option("--reps", reps, "repetitions, best time kept")->capture_default_str();
  app.add_option("--threads", nthreads, "worker threads")->envname("LINSET_THREADS");
  CLI11_PARSE(app, argc, argv);
  if (nthreads > 0) set_threads(nthreads);

  std::printf("threads: %d\n%-34s %10s %10s %8s\n", threads(), "kernel", "serial s", "parallel s", "speedup");
  Rng rng(7);

  auto F12 = tower_for(2, 12);
  LinPoly f12 = random_poly(F12, rng);
  row("linear_set graph q=2 n=12", reps, [&](Exec ex) { linear_set(graph_space(f12), ex); });

  auto F8 = tower_for(3, 8);
  LinPoly lp = LinPoly::monomial(F8, 1);
  row("is_scattered x^q q=3 n=8", reps, [&](Exec ex) { is_scattered(lp, ex); });
  row("ratio_image_size x^q q=3 n=8", reps, [&](Exec ex) { ratio_image_size(lp, ex); });

  auto F4 = tower_for(2, 4);
  row("rank-4 census q=2 n=4", reps, [&](Exec ex) { rank_census(F4, 4, ex); });

  auto F3 = tower_for(3, 3);
  row("rank-3 census q=3 n=3", reps, [&](Exec ex) { rank_census(F3, 3, ex); });

  auto Fb = tower_for(2, 4);
  auto U = graph_space(LinPoly::trace(Fb));
  auto U2 = graph_space(LinPoly::monomial(Fb, 1));
  row("brute equivalence q=2 n=4 (none)", reps, [&](Exec ex) { brute_equivalent(U, U2, kDefaultBudget, ex); });

  auto G = tower_for(3, 4);
  row("Singer sweep GL(2,9)", reps, [&](Exec ex) { singer_sweep(*G, 2, ex); });

  return 0;
}
