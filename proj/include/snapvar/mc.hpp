#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace snapvar {

/// Single-pass central-moment accumulator (mean, M2..M4) with an exact
/// pairwise merge. M4 feeds the variance-of-variance standard error.
struct MomentAccumulator {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;
  double m3 = 0.0;
  double m4 = 0.0;

  void add(double x) {
    const double n1 = static_cast<double>(n);
    n += 1;
    const double nn = static_cast<double>(n);
    const double delta = x - mean;
    const double delta_n = delta / nn;
    const double delta_n2 = delta_n * delta_n;
    const double term1 = delta * delta_n * n1;
    mean += delta_n;
    m4 += term1 * delta_n2 * (nn * nn - 3.0 * nn + 3.0) + 6.0 * delta_n2 * m2 - 4.0 * delta_n * m3;
    m3 += term1 * delta_n * (nn - 2.0) - 3.0 * delta_n * m2;
    m2 += term1;
  }

  void merge(const MomentAccumulator& b) {
    if (b.n == 0) return;
    if (n == 0) {
      *this = b;
      return;
    }
    const double na = static_cast<double>(n);
    const double nb = static_cast<double>(b.n);
    const double nt = na + nb;
    const double delta = b.mean - mean;
    const double d2 = delta * delta;

    const double m2t = m2 + b.m2 + d2 * na * nb / nt;
    const double m3t = m3 + b.m3 + delta * d2 * na * nb * (na - nb) / (nt * nt) +
                       3.0 * delta * (na * b.m2 - nb * m2) / nt;
    const double m4t = m4 + b.m4 +
                       d2 * d2 * na * nb * (na * na - na * nb + nb * nb) / (nt * nt * nt) +
                       6.0 * d2 * (na * na * b.m2 + nb * nb * m2) / (nt * nt) +
                       4.0 * delta * (na * b.m3 - nb * m3) / nt;

    mean += delta * nb / nt;
    m2 = m2t;
    m3 = m3t;
    m4 = m4t;
    n += b.n;
  }

  double variance() const { return n > 1 ? m2 / static_cast<double>(n - 1) : 0.0; }

  double stderr_mean() const {
    return n > 1 ? std::sqrt(variance() / static_cast<double>(n)) : 0.0;
  }

  double fourth_central_moment() const { return n > 0 ? m4 / static_cast<double>(n) : 0.0; }

  /// Standard error of the unbiased sample variance,
  /// Var(s^2) = (mu4 - sigma^4 (n-3)/(n-1)) / n.
  double stderr_variance() const {
    if (n < 2) return 0.0;
    const double nn = static_cast<double>(n);
    const double s2 = variance();
    const double inner = (fourth_central_moment() - s2 * s2 * (nn - 3.0) / (nn - 1.0)) / nn;
    return inner > 0.0 ? std::sqrt(inner) : 0.0;
  }
};

/// Samples are accumulated in fixed chunks and chunk accumulators merged in
/// index order, so the result is bit-identical for any worker count. The
/// chunk size is part of that contract.
inline constexpr std::uint64_t kAccumulatorChunk = 1024;

/// f(i) -> double for i in [0, n), evaluated chunk by chunk on one thread.
/// Reference implementation: the parallel driver must match it bit for bit.
template <typename F>
MomentAccumulator accumulate_serial(std::uint64_t n, F&& f) {
  MomentAccumulator total;
  for (std::uint64_t start = 0; start < n; start += kAccumulatorChunk) {
    const std::uint64_t stop = std::min(n, start + kAccumulatorChunk);
    MomentAccumulator chunk;
    for (std::uint64_t i = start; i < stop; ++i) chunk.add(f(i));
    total.merge(chunk);
  }
  return total;
}

/// Accumulates n_stats statistics per sample in one pass;
/// f(i, out_span_of_n_stats) fills the values. Same chunking contract.
template <typename F>
std::vector<MomentAccumulator> accumulate_many_parallel(std::uint64_t n, std::size_t n_stats, F&& f) {
  const std::int64_t n_chunks = static_cast<std::int64_t>((n + kAccumulatorChunk - 1) / kAccumulatorChunk);
  std::vector<std::vector<MomentAccumulator>> chunks(static_cast<size_t>(n_chunks));

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < n_chunks; ++c) {
    const std::uint64_t start = static_cast<std::uint64_t>(c) * kAccumulatorChunk;
    const std::uint64_t stop = std::min(n, start + kAccumulatorChunk);
    std::vector<MomentAccumulator> local(n_stats);
    std::vector<double> values(n_stats);
    for (std::uint64_t i = start; i < stop; ++i) {
      f(i, values);
      for (std::size_t s = 0; s < n_stats; ++s) local[s].add(values[s]);
    }
    chunks[static_cast<size_t>(c)] = std::move(local);
  }

  std::vector<MomentAccumulator> total(n_stats);
  for (const auto& chunk : chunks)
    for (std::size_t s = 0; s < n_stats; ++s) total[s].merge(chunk[s]);
  return total;
}

/// OpenMP version of accumulate_serial with identical chunking and merge
/// order; scheduling only decides which thread computes which chunk.
template <typename F>
MomentAccumulator accumulate_parallel(std::uint64_t n, F&& f) {
  const std::int64_t n_chunks = static_cast<std::int64_t>((n + kAccumulatorChunk - 1) / kAccumulatorChunk);
  std::vector<MomentAccumulator> chunks(static_cast<size_t>(n_chunks));

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < n_chunks; ++c) {
    const std::uint64_t start = static_cast<std::uint64_t>(c) * kAccumulatorChunk;
    const std::uint64_t stop = std::min(n, start + kAccumulatorChunk);
    MomentAccumulator chunk;
    for (std::uint64_t i = start; i < stop; ++i) chunk.add(f(i));
    chunks[static_cast<size_t>(c)] = chunk;
  }

  MomentAccumulator total;
  for (const auto& chunk : chunks) total.merge(chunk);
  return total;
}

}  // namespace snapvar
