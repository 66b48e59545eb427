#include "snapvar/experiments.hpp"

#include <cmath>
#include <stdexcept>

#include "snapvar/haar.hpp"

namespace snapvar {

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::uniform: return "uniform";
    case Regime::haar_factors: return "haar-factors";
    case Regime::haar_blocks: return "haar-blocks";
  }
  return "unknown";
}

std::optional<Regime> parse_regime(const std::string& name) {
  if (name == "uniform") return Regime::uniform;
  if (name == "haar-factors") return Regime::haar_factors;
  if (name == "haar-blocks") return Regime::haar_blocks;
  return std::nullopt;
}

CostSpec CostFamily::make(int d) const {
  if (kind == CostKind::state) {
    switch (observable) {
      case Observable::fock0: return StateCost(ComplexMatrix::basis_projector(d, 0));
      case Observable::number: return StateCost(particle_number_observable(d));
      case Observable::custom:
        if (custom_matrix.dim() != d)
          throw std::invalid_argument("custom observable has dimension " +
                                      std::to_string(custom_matrix.dim()) + ", sweep point needs " +
                                      std::to_string(d));
        return StateCost(custom_matrix);
    }
  }
  switch (target) {
    case Target::identity: return GateCost(ComplexMatrix::identity(d));
    case Target::custom:
      if (custom_matrix.dim() != d)
        throw std::invalid_argument("custom target has dimension " +
                                    std::to_string(custom_matrix.dim()) + ", sweep point needs " +
                                    std::to_string(d));
      return GateCost(custom_matrix);
    default: break;
  }
  throw std::logic_error("CostFamily::make: unreachable");
}

double CostFamily::predicted_variance(int d) const {
  const CostSpec spec = make(d);
  if (kind == CostKind::state) return state_variance(std::get<StateCost>(spec).observable, d);
  return gate_variance(std::get<GateCost>(spec).target);
}

std::string CostFamily::description() const {
  if (kind == CostKind::state) {
    switch (observable) {
      case Observable::fock0: return "state:fock0";
      case Observable::number: return "state:number";
      case Observable::custom: return "state:custom";
    }
  }
  return target == Target::identity ? "gate:identity" : "gate:custom";
}

GradStats GradStats::from(const MomentAccumulator& acc, std::uint64_t seed) {
  GradStats s;
  s.n_samples = acc.n;
  s.mean = acc.mean;
  s.variance = acc.variance();
  s.stderr_mean = acc.stderr_mean();
  s.stderr_variance = acc.stderr_variance();
  s.master_seed = seed;
  return s;
}

void SweepConfig::validate() const {
  if (d_values.empty()) throw std::invalid_argument("sweep needs at least one dimension");
  if (n_samples < 100) throw std::invalid_argument("sweep needs n_samples >= 100");
  int d_min = d_values.front();
  for (int d : d_values) {
    if (d < 2) throw std::invalid_argument("sweep dimensions must be >= 2");
    d_min = std::min(d_min, d);
  }
  if (nu < 0 || nu > d_min - 1)
    throw std::invalid_argument("nu exceeds d-1 for the smallest sweep dimension");
  if (t_values.empty()) return;  // empty grid is allowed and yields no rows
  int t_min = t_values.front();
  for (int t : t_values) {
    if (t < 1) throw std::invalid_argument("block counts must be >= 1");
    t_min = std::min(t_min, t);
  }
  if (k < 1 || k > t_min)
    throw std::invalid_argument("k exceeds the smallest block count in the sweep");
  if (!(alpha_lo <= alpha_hi) || !std::isfinite(alpha_lo) || !std::isfinite(alpha_hi))
    throw std::invalid_argument("invalid alpha range");
}

AnsatzParams sample_params(const SweepConfig& cfg, int d, int t, RngStream& stream) {
  constexpr double two_pi = 6.283185307179586476925286766559;
  AnsatzParams p;
  p.blocks.resize(t);
  for (int b = 0; b < t; ++b) {
    p.blocks[b].alpha = stream.uniform(cfg.alpha_lo, cfg.alpha_hi);
    p.blocks[b].thetas.resize(d);
    for (int n = 0; n < d; ++n) p.blocks[b].thetas[n] = stream.uniform(0.0, two_pi);
  }
  return p;
}

namespace {

ComplexMatrix haar_product(int d, int count, RngStream& stream) {
  ComplexMatrix u = ComplexMatrix::identity(d);
  for (int i = 0; i < count; ++i) u = matmul(haar_unitary(d, stream), u);
  return u;
}

struct GradientFactors {
  ComplexMatrix u_r, w_a, w_b, u_l;
};

/// Draw the factors of one sample under the given regime. Draw order is
/// fixed: uniform parameters block 1..T (alpha before thetas), then any Haar
/// replacements in the order u_l blocks, w_a, w_b, u_r blocks.
GradientFactors draw_factors(const SweepConfig& cfg, int d, int t, RngStream& stream) {
  GradientFactors f;
  switch (cfg.regime) {
    case Regime::uniform: {
      const AnsatzParams p = sample_params(cfg, d, t, stream);
      SplitAnsatz s = split_ansatz(p, cfg.k);
      BlockPartition part = partition_block(s.b, cfg.nu);
      f.u_r = std::move(s.u_r);
      f.u_l = std::move(s.u_l);
      f.w_a = std::move(part.w_a);
      f.w_b = std::move(part.w_b);
      return f;
    }
    case Regime::haar_factors: {
      f.u_l = haar_product(d, cfg.k - 1, stream);
      f.w_a = haar_unitary(d, stream);
      f.w_b = haar_unitary(d, stream);
      f.u_r = haar_product(d, t - cfg.k, stream);
      return f;
    }
    case Regime::haar_blocks: {
      // Physical differentiated block, Haar surroundings.
      BlockParams b;
      constexpr double two_pi = 6.283185307179586476925286766559;
      b.alpha = stream.uniform(cfg.alpha_lo, cfg.alpha_hi);
      b.thetas.resize(d);
      for (int n = 0; n < d; ++n) b.thetas[n] = stream.uniform(0.0, two_pi);
      BlockPartition part = partition_block(b, cfg.nu);
      f.u_l = haar_product(d, cfg.k - 1, stream);
      f.w_a = std::move(part.w_a);
      f.w_b = std::move(part.w_b);
      f.u_r = haar_product(d, t - cfg.k, stream);
      return f;
    }
  }
  throw std::logic_error("draw_factors: unreachable");
}

double gradient_sample(const CostSpec& spec, const SweepConfig& cfg, int d, int t,
                       std::uint64_t point_seed, std::uint64_t i) {
  RngStream stream(point_seed, i);
  const GradientFactors f = draw_factors(cfg, d, t, stream);
  if (std::holds_alternative<StateCost>(spec)) {
    const StateCost& s = std::get<StateCost>(spec);
    return state_gradient_from_factors(s.observable, s.rho0, f.u_r, f.w_a, f.w_b, f.u_l, cfg.nu);
  }
  return gate_gradient_from_factors(std::get<GateCost>(spec).target, f.u_r, f.w_a, f.w_b, f.u_l,
                                    cfg.nu);
}

std::uint64_t point_seed_for(const SweepConfig& cfg, int d, int t) {
  return mix_seed(cfg.seed, mix_seed(static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(t)));
}

void validate_point(const SweepConfig& cfg, int d, int t) {
  if (d < 2) throw std::invalid_argument("estimate needs d >= 2");
  if (t < 1) throw std::invalid_argument("estimate needs T >= 1");
  if (cfg.nu < 0 || cfg.nu > d - 1) throw std::invalid_argument("nu exceeds d-1");
  if (cfg.k < 1 || cfg.k > t) throw std::invalid_argument("k exceeds the block count");
  if (cfg.n_samples < 100) throw std::invalid_argument("estimate needs n_samples >= 100");
  if (!(cfg.alpha_lo <= cfg.alpha_hi) || !std::isfinite(cfg.alpha_lo) || !std::isfinite(cfg.alpha_hi))
    throw std::invalid_argument("invalid alpha range");
}

}  // namespace

GradStats estimate_gradient_stats(const SweepConfig& cfg, int d, int t) {
  validate_point(cfg, d, t);
  const CostSpec spec = cfg.cost.make(d);
  const std::uint64_t point_seed = point_seed_for(cfg, d, t);
  const MomentAccumulator acc = accumulate_parallel(
      cfg.n_samples, [&](std::uint64_t i) { return gradient_sample(spec, cfg, d, t, point_seed, i); });
  return GradStats::from(acc, cfg.seed);
}

GradStats estimate_gradient_stats_serial(const SweepConfig& cfg, int d, int t) {
  validate_point(cfg, d, t);
  const CostSpec spec = cfg.cost.make(d);
  const std::uint64_t point_seed = point_seed_for(cfg, d, t);
  const MomentAccumulator acc = accumulate_serial(
      cfg.n_samples, [&](std::uint64_t i) { return gradient_sample(spec, cfg, d, t, point_seed, i); });
  return GradStats::from(acc, cfg.seed);
}

GradStats estimate_haar_factor_stats(const CostSpec& cost, int d, std::uint64_t n_samples,
                                     std::uint64_t seed) {
  if (d < 2) throw std::invalid_argument("estimate_haar_factor_stats: requires d >= 2");
  if (cost_dim(cost) != d) throw std::invalid_argument("estimate_haar_factor_stats: dimension mismatch");
  const int nu = 1 % d;  // any fixed nu is equivalent under Haar invariance
  const MomentAccumulator acc = accumulate_parallel(n_samples, [&](std::uint64_t i) -> double {
    RngStream stream(seed, i);
    const ComplexMatrix u_l = haar_unitary(d, stream);
    const ComplexMatrix w_a = haar_unitary(d, stream);
    const ComplexMatrix w_b = haar_unitary(d, stream);
    const ComplexMatrix u_r = haar_unitary(d, stream);
    if (std::holds_alternative<StateCost>(cost)) {
      const StateCost& s = std::get<StateCost>(cost);
      return state_gradient_from_factors(s.observable, s.rho0, u_r, w_a, w_b, u_l, nu);
    }
    return gate_gradient_from_factors(std::get<GateCost>(cost).target, u_r, w_a, w_b, u_l, nu);
  });
  return GradStats::from(acc, seed);
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  std::vector<SweepRow> rows;
  rows.reserve(cfg.d_values.size() * cfg.t_values.size());
  for (int d : cfg.d_values) {
    for (int t : cfg.t_values) {
      SweepRow row;
      row.d = d;
      row.t = t;
      row.stats = estimate_gradient_stats(cfg, d, t);
      row.analytic_variance = cfg.cost.predicted_variance(d);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

SlopeFit fit_loglog_slope(std::span<const SweepRow> rows) {
  SlopeFit fit;
  std::vector<double> xs, ys;
  for (const auto& row : rows) {
    if (row.stats.variance > 0.0) {
      xs.push_back(std::log(static_cast<double>(row.d)));
      ys.push_back(std::log(row.stats.variance));
    }
  }
  const int n = static_cast<int>(xs.size());
  fit.n_points = n;
  if (n < 2) return fit;
  double sx = 0, sy = 0;
  for (int i = 0; i < n; ++i) {
    sx += xs[i];
    sy += ys[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  fit.slope = sxy / sxx;
  if (n > 2) {
    double ss_res = 0;
    const double intercept = my - fit.slope * mx;
    for (int i = 0; i < n; ++i) {
      const double r = ys[i] - (intercept + fit.slope * xs[i]);
      ss_res += r * r;
    }
    fit.std_error = std::sqrt(ss_res / (n - 2) / sxx);
  }
  return fit;
}

TwoDesignReport two_design_report(int d, std::uint64_t n_pairs, std::uint64_t seed, int nu) {
  if (d < 2) throw std::invalid_argument("two_design_report: requires d >= 2");
  if (nu < 0 || nu >= d) throw std::out_of_range("two_design_report: nu out of range");
  constexpr double two_pi = 6.283185307179586476925286766559;

  const auto draw_block_params = [d, two_pi](RngStream& stream) {
    BlockParams p;
    p.alpha = stream.uniform(0.0, two_pi);
    p.thetas.resize(d);
    for (int n = 0; n < d; ++n) p.thetas[n] = stream.uniform(0.0, two_pi);
    return p;
  };

  const EnsembleSampler haar_sampler = [d](RngStream& stream) { return haar_unitary(d, stream); };
  const EnsembleSampler w_a_sampler = [=](RngStream& stream) {
    return partition_block(draw_block_params(stream), nu).w_a;
  };
  const EnsembleSampler w_b_sampler = [=](RngStream& stream) {
    return partition_block(draw_block_params(stream), nu).w_b;
  };
  const EnsembleSampler block_sampler = [=](RngStream& stream) {
    return block(draw_block_params(stream));
  };

  TwoDesignReport report;
  report.d = d;
  report.nu = nu;
  report.n_pairs = n_pairs;
  report.seed = seed;

  const SeededRng rng{seed};
  // Distinct stream bases keep every (ensemble, t) cell statistically
  // independent while staying deterministic.
  std::uint64_t base = 0;
  const auto next_base = [&base, n_pairs]() {
    const std::uint64_t b = base;
    base += n_pairs;
    return b;
  };

  for (int t : {1, 2}) {
    const FramePotentialEstimate haar_ref = frame_potential(haar_sampler, t, n_pairs, rng, next_base());
    const auto add_row = [&](const std::string& name, const EnsembleSampler& sampler) {
      const FramePotentialEstimate est =
          name == "haar" ? haar_ref : frame_potential(sampler, t, n_pairs, rng, next_base());
      report.rows.push_back({name, t, est.value, est.std_error, haar_ref.value, haar_ref.std_error});
    };
    add_row("haar", haar_sampler);
    add_row("w_a", w_a_sampler);
    add_row("w_b", w_b_sampler);
    add_row("block", block_sampler);
  }
  return report;
}

ParticleNumberAdjudication adjudicate_particle_number(std::span<const int> d_values,
                                                      std::uint64_t n_samples, std::uint64_t seed) {
  ParticleNumberAdjudication out;
  double total_closed = 0.0, total_state = 0.0, total_wg = 0.0;
  bool closed_ok = true, state_ok = true;
  for (int d : d_values) {
    AdjudicationPoint pt;
    pt.d = d;
    const CostSpec spec = CostSpec(StateCost(particle_number_observable(d)));
    pt.stats = estimate_haar_factor_stats(spec, d, n_samples, mix_seed(seed, static_cast<std::uint64_t>(d)));
    const double se = pt.stats.stderr_variance;
    pt.z_closed_form = (pt.stats.variance - particle_number_variance_closed_form(d)) / se;
    pt.z_state_formula = (pt.stats.variance - particle_number_variance_state_formula(d)) / se;
    pt.z_weingarten = (pt.stats.variance - particle_number_variance_weingarten(d)) / se;
    total_closed += std::abs(pt.z_closed_form);
    total_state += std::abs(pt.z_state_formula);
    total_wg += std::abs(pt.z_weingarten);
    closed_ok = closed_ok && std::abs(pt.z_closed_form) <= 3.0;
    state_ok = state_ok && std::abs(pt.z_state_formula) <= 3.0;
    out.points.push_back(pt);
  }
  (void)total_wg;
  if (total_closed < total_state) {
    out.winner = FormulaId::particle_number_closed_form;
    out.winner_within_3sigma = closed_ok;
  } else {
    out.winner = FormulaId::particle_number_state_formula;
    out.winner_within_3sigma = state_ok;
  }
  return out;
}

}  // namespace snapvar
