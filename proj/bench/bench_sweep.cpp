// Times sweep_serial against sweep_parallel on the conjugacy kernel.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <omp.h>

#include "majorana/parallel.hpp"
#include "majorana/sampling.hpp"
#include "majorana/spinors.hpp"
#include "majorana/symmetry.hpp"

using namespace majorana;

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 200000;
  MomentumSampler sampler(1);
  std::vector<FourMomentum> ps;
  ps.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ps.push_back(sampler.next());
  const auto c = charge_conjugation();
  auto kernel = [&](std::size_t i) {
    double worst = 0.0;
    for (Kind k : {Kind::S, Kind::A}) {
      for (Index idx : {Index::Up, Index::Down}) {
        const CVector l = lambda_spinor(ps[i], k, idx).components();
        const double sign = k == Kind::S ? 1.0 : -1.0;
        worst = std::max(worst, distance(c.act(l), sign * l) / norm(l));
      }
    }
    return worst;
  };

  auto time = [](auto&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    auto out = f();
    return std::make_pair(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), out);
  };
  const auto [ts, serial] = time([&] { return sweep_serial(n, kernel); });
  const auto [tp, parallel] = time([&] { return sweep_parallel(n, kernel); });
  std::printf("momenta %zu  threads %d\n", n, omp_get_max_threads());
  std::printf("serial   %.3f s\nparallel %.3f s  (speedup %.2fx)\n", ts, tp, ts / tp);
  std::printf("results %s\n", serial == parallel ? "identical" : "DIFFER");
  return serial == parallel ? 0 : 1;
}
