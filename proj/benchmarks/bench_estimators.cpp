// Compares the serial reference estimator against the OpenMP one: same
// bits, different wall time.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "snapvar/experiments.hpp"

using namespace snapvar;

namespace {

double seconds(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SweepConfig bench_config(Regime regime, std::uint64_t n) {
  SweepConfig cfg;
  cfg.cost.kind = CostKind::state;
  cfg.cost.observable = CostFamily::Observable::fock0;
  cfg.d_values = {8};
  cfg.t_values = {10};
  cfg.k = 3;
  cfg.nu = 1;
  cfg.n_samples = n;
  cfg.seed = 42;
  cfg.regime = regime;
  return cfg;
}

}  // namespace

int main() {
  const std::uint64_t n = 20000;
#ifdef _OPENMP
  const int max_threads = omp_get_max_threads();
#else
  const int max_threads = 1;
#endif
  std::printf("gradient-variance estimator, d=8, T=10, N=%llu\n",
              static_cast<unsigned long long>(n));
  std::printf("%-14s %-10s %-12s %-12s %-10s\n", "regime", "path", "seconds", "samples/s", "match");

  for (Regime regime : {Regime::uniform, Regime::haar_factors}) {
    const SweepConfig cfg = bench_config(regime, n);

    auto t0 = std::chrono::steady_clock::now();
    const GradStats serial = estimate_gradient_stats_serial(cfg, 8, 10);
    const double ts = seconds(t0);

    t0 = std::chrono::steady_clock::now();
    const GradStats parallel = estimate_gradient_stats(cfg, 8, 10);
    const double tp = seconds(t0);

    const bool match = serial.mean == parallel.mean && serial.variance == parallel.variance &&
                       serial.stderr_variance == parallel.stderr_variance;
    std::printf("%-14s %-10s %-12.3f %-12.0f %-10s\n", regime_name(regime).c_str(), "serial", ts,
                n / ts, "-");
    std::printf("%-14s %-10d %-12.3f %-12.0f %-10s\n", regime_name(regime).c_str(), max_threads,
                tp, n / tp, match ? "bitwise" : "MISMATCH");
    if (!match) return 1;
  }
  return 0;
}
