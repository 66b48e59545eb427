#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "snapvar/analytic.hpp"
#include "snapvar/cost.hpp"
#include "snapvar/gates.hpp"
#include "snapvar/mc.hpp"
#include "snapvar/rng.hpp"

namespace snapvar {

/// Sampling regimes for the gradient statistics.
///  - uniform:      the physical protocol, all alpha and theta uniform.
///  - haar_factors: w_a, w_b and every surrounding block replaced by
///                  independent Haar unitaries (the propositions' setting).
///  - haar_blocks:  surrounding blocks Haar, the differentiated block keeps
///                  its physical structure; isolates inter-block effects.
enum class Regime { uniform, haar_factors, haar_blocks };

std::string regime_name(Regime r);
std::optional<Regime> parse_regime(const std::string& name);

enum class CostKind { state, gate };

/// Cost family that can be instantiated at any sweep dimension.
struct CostFamily {
  enum class Observable { fock0, number, custom };
  enum class Target { identity, custom };

  CostKind kind = CostKind::state;
  Observable observable = Observable::fock0;
  Target target = Target::identity;
  ComplexMatrix custom_matrix;  // observable or target when custom

  CostSpec make(int d) const;
  /// Analytic variance prediction attached to sweep rows.
  double predicted_variance(int d) const;
  std::string description() const;
};

struct GradStats {
  std::uint64_t n_samples = 0;
  double mean = 0.0;
  double variance = 0.0;       // unbiased, n-1 denominator
  double stderr_mean = 0.0;
  double stderr_variance = 0.0;  // from the fourth central moment
  std::uint64_t master_seed = 0;

  static GradStats from(const MomentAccumulator& acc, std::uint64_t seed);
};

struct SweepConfig {
  CostFamily cost;
  std::vector<int> d_values;
  std::vector<int> t_values;
  int k = 3;   // 1-based block index
  int nu = 1;  // 0-based phase index
  std::uint64_t n_samples = 10000;
  std::uint64_t seed = 0;
  Regime regime = Regime::uniform;
  double alpha_lo = 0.0;
  double alpha_hi = 6.283185307179586476925286766559;  // [0, 2pi)

  void validate() const;  // throws std::invalid_argument
};

/// Uniform protocol parameters for one (d, t) point. Per block the draw
/// order is alpha first, then the d phases.
AnsatzParams sample_params(const SweepConfig& cfg, int d, int t, RngStream& stream);

/// One grid point under cfg.regime. Deterministic given (cfg.seed, d, t):
/// sample i draws from substream(point_seed, i) regardless of worker count.
GradStats estimate_gradient_stats(const SweepConfig& cfg, int d, int t);

/// Serial reference of estimate_gradient_stats; must match it bit for bit.
GradStats estimate_gradient_stats_serial(const SweepConfig& cfg, int d, int t);

/// The propositions' exact setting: w_a, w_b and one Haar unitary on each
/// side (a product of independent Haar blocks is again Haar, so this covers
/// every t >= 3 with an interior k).
GradStats estimate_haar_factor_stats(const CostSpec& cost, int d, std::uint64_t n_samples,
                                     std::uint64_t seed);

struct SweepRow {
  int d = 0;
  int t = 0;
  GradStats stats;
  double analytic_variance = 0.0;
};

/// Deterministic grid order: d outer, t inner.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

/// Ordinary least-squares fit of log(variance) against log(d).
struct SlopeFit {
  double slope = 0.0;
  double std_error = 0.0;
  int n_points = 0;
};
SlopeFit fit_loglog_slope(std::span<const SweepRow> rows);

struct TwoDesignRow {
  std::string ensemble;  // "haar", "w_a", "w_b", "block"
  int t = 1;
  double value = 0.0;
  double std_error = 0.0;
  double haar_reference = 0.0;
  double haar_reference_std_error = 0.0;
};

struct TwoDesignReport {
  int d = 0;
  int nu = 1;
  std::uint64_t n_pairs = 0;
  std::uint64_t seed = 0;
  std::vector<TwoDesignRow> rows;
};

/// Frame potentials at t = 1, 2 for the w_a / w_b / full-block ensembles
/// with uniform parameters, against the Haar reference computed by the same
/// estimator.
TwoDesignReport two_design_report(int d, std::uint64_t n_pairs, std::uint64_t seed, int nu = 1);

/// Monte Carlo adjudication between the two particle-number variance
/// candidates (plus the moment-integral value, reported for context).
struct AdjudicationPoint {
  int d = 0;
  GradStats stats;
  double z_closed_form = 0.0;
  double z_state_formula = 0.0;
  double z_weingarten = 0.0;
};

struct ParticleNumberAdjudication {
  std::vector<AdjudicationPoint> points;
  FormulaId winner = FormulaId::particle_number_state_formula;  // nearest candidate by total |z|
  bool winner_within_3sigma = false;  // nearest candidate within 3 sigma at every point
};

ParticleNumberAdjudication adjudicate_particle_number(std::span<const int> d_values,
                                                      std::uint64_t n_samples, std::uint64_t seed);

}  // namespace snapvar
