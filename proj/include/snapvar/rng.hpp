#pragma once

#include <cstdint>

#include "snapvar/linalg.hpp"

namespace snapvar {

/// Mixes two 64-bit words into one (SplitMix64 finalizer chain). Used for
/// deriving independent stream states and per-grid-point seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

/// One deterministic random stream (xoshiro256++ state seeded via SplitMix64).
/// Identical (master_seed, stream_index) pairs produce identical draws on
/// every platform: uniforms come from the top 53 bits, normals from an
/// explicit Box-Muller transform, never from std::*_distribution.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

  std::uint64_t next_u64();
  /// Uniform on [0, 1).
  double uniform();
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);
  /// Standard normal (Box-Muller; pairs are generated together).
  double normal();
  /// Standard complex normal: (N + iN)/sqrt(2), E|z|^2 = 1.
  Complex complex_normal();

 private:
  std::uint64_t s_[4];
  double cached_normal_ = 0.0;
  bool has_cached_ = false;
};

/// Master seed plus deterministic substream derivation. substream(i) and
/// substream(j) are statistically independent for i != j, which is what
/// makes per-sample parallelism scheduling-invariant.
struct SeededRng {
  std::uint64_t master_seed = 0;
  RngStream substream(std::uint64_t i) const { return RngStream(master_seed, i); }
};

}  // namespace snapvar
