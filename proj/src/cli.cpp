#include "snapvar/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "snapvar/analytic.hpp"
#include "snapvar/experiments.hpp"
#include "snapvar/haar.hpp"
#include "snapvar/matrix_io.hpp"
#include "snapvar/mc.hpp"

namespace snapvar::cli {

namespace {

std::string format_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", s);
  return buf;
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv(kSeedEnvVar)) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError(std::string(kSeedEnvVar) + " is not a valid 64-bit seed");
    }
  }
  return 1;
}

void apply_threads(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

std::vector<int> parse_int_list(const std::string& csv, const char* what) {
  std::vector<int> out;
  std::istringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw CLI::ValidationError(std::string(what) + ": bad integer '" + tok + "'");
    }
  }
  if (out.empty()) throw CLI::ValidationError(std::string(what) + ": empty list");
  return out;
}

std::vector<double> parse_double_list(const std::string& csv, const char* what) {
  std::vector<double> out;
  std::istringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw CLI::ValidationError(std::string(what) + ": bad number '" + tok + "'");
    }
  }
  if (out.empty()) throw CLI::ValidationError(std::string(what) + ": empty list");
  return out;
}

ComplexMatrix load_matrix_flag(const std::string& path, const char* flag) {
  // a broken matrix file is a usage error, not a runtime failure
  try {
    return read_matrix_file(path);
  } catch (const std::exception& e) {
    throw CLI::ValidationError(std::string(flag) + ": " + e.what());
  }
}

CostFamily make_cost_family(const std::string& cost, const std::string& observable,
                            const std::string& target) {
  CostFamily family;
  if (cost == "state") {
    family.kind = CostKind::state;
    if (observable == "fock0") {
      family.observable = CostFamily::Observable::fock0;
    } else if (observable == "number") {
      family.observable = CostFamily::Observable::number;
    } else if (observable.rfind("file:", 0) == 0) {
      family.observable = CostFamily::Observable::custom;
      family.custom_matrix = load_matrix_flag(observable.substr(5), "--observable");
    } else {
      throw CLI::ValidationError("--observable must be fock0, number or file:<path>");
    }
  } else if (cost == "gate") {
    family.kind = CostKind::gate;
    if (target == "identity") {
      family.target = CostFamily::Target::identity;
    } else if (target.rfind("file:", 0) == 0) {
      family.target = CostFamily::Target::custom;
      family.custom_matrix = load_matrix_flag(target.substr(5), "--target");
    } else {
      throw CLI::ValidationError("--target must be identity or file:<path>");
    }
  } else {
    throw CLI::ValidationError("--cost must be state or gate");
  }
  return family;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

// ---------------------------------------------------------------------------
// verify-moments

struct VerifyMomentsOptions {
  std::string d_list = "2,3,4";
  std::uint64_t mc_samples = 50000;
  int tuples = 20;
  int queries = 20;
  std::uint64_t seed = 1;
};

ComplexMatrix random_operator(int d, RngStream& stream) {
  ComplexMatrix m(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = stream.complex_normal();
  return m;
}

/// Closed forms against the exhaustive summation oracles; returns the max
/// absolute deviation over all six integral identities.
double oracle_max_deviation(int d, int tuples, std::uint64_t seed) {
  RngStream stream(seed, static_cast<std::uint64_t>(d));
  double max_dev = 0.0;
  const auto record = [&max_dev](Complex closed, Complex oracle) {
    max_dev = std::max(max_dev, std::abs(closed - oracle));
  };
  for (int r = 0; r < tuples; ++r) {
    const ComplexMatrix a = random_operator(d, stream);
    const ComplexMatrix b = random_operator(d, stream);
    const ComplexMatrix c = random_operator(d, stream);
    const ComplexMatrix e = random_operator(d, stream);
    record(haar_trace_pair(a, b), weingarten_sum_trace_pair(a, b));
    record(haar_trace_quad(a, b, c, e), weingarten_sum_trace_quad(a, b, c, e));
    record(haar_conjugation(a, b), weingarten_sum_conjugation(a, b));
    record(haar_conjugation_quad(a, b, c, e), weingarten_sum_conjugation_quad(a, b, c, e));
    record(haar_conjugation_pair(a, b, c, e), weingarten_sum_conjugation_pair(a, b, c, e));
    record(haar_conjugation_squared(a, b), weingarten_sum_conjugation_pair(a, b, a, b));
  }
  return max_dev;
}

struct MomentMcResult {
  double max_abs_z = 0.0;
  int checks = 0;
};

/// Empirical element moments over n Haar draws against the exact first and
/// second moment formulas, 3-sigma per real/imaginary component.
MomentMcResult moment_mc_check(int d, std::uint64_t n, int queries, std::uint64_t seed) {
  RngStream qstream(seed, 1000003 + static_cast<std::uint64_t>(d));
  const auto draw_index = [&]() { return static_cast<int>(qstream.next_u64() % d); };

  struct Query1 {
    int i1, j1, i2, j2;
  };
  std::vector<Query1> q1;
  std::vector<MomentQuery> q2;
  for (int q = 0; q < queries; ++q) {
    // Half unconstrained, half forced onto a nonvanishing Kronecker pattern
    // so both zero and nonzero expectations are exercised.
    if (q % 2 == 0) {
      q1.push_back({draw_index(), draw_index(), draw_index(), draw_index()});
      q2.push_back({draw_index(), draw_index(), draw_index(), draw_index(), draw_index(),
                    draw_index(), draw_index(), draw_index(), d});
    } else {
      const int i = draw_index(), j = draw_index();
      q1.push_back({i, j, i, j});
      const int i2 = draw_index(), j2 = draw_index();
      q2.push_back({i, j, i2, j2, i, j, i2, j2, d});
    }
  }

  const std::size_t n_stats = 2 * (q1.size() + q2.size());
  const SeededRng rng{mix_seed(seed, static_cast<std::uint64_t>(d))};
  const std::vector<MomentAccumulator> acc =
      accumulate_many_parallel(n, n_stats, [&](std::uint64_t s, std::span<double> out) {
        RngStream stream = rng.substream(s);
        const ComplexMatrix w = haar_unitary(d, stream);
        std::size_t slot = 0;
        for (const auto& q : q1) {
          const Complex v = w(q.i1, q.j1) * std::conj(w(q.i2, q.j2));
          out[slot++] = v.real();
          out[slot++] = v.imag();
        }
        for (const auto& q : q2) {
          const Complex v = w(q.i1, q.j1) * w(q.i2, q.j2) * std::conj(w(q.p1, q.k1)) *
                            std::conj(w(q.p2, q.k2));
          out[slot++] = v.real();
          out[slot++] = v.imag();
        }
      });

  MomentMcResult res;
  std::size_t slot = 0;
  const auto check_component = [&res](const MomentAccumulator& a, double exact) {
    const double se = std::max(a.stderr_mean(), 1e-300);
    res.max_abs_z = std::max(res.max_abs_z, std::abs(a.mean - exact) / se);
    ++res.checks;
  };
  for (const auto& q : q1) {
    const Complex exact = haar_first_moment(q.i1, q.j1, q.i2, q.j2, d);
    check_component(acc[slot], exact.real());
    check_component(acc[slot + 1], exact.imag());
    slot += 2;
  }
  for (const auto& q : q2) {
    const Complex exact = haar_second_moment(q);
    check_component(acc[slot], exact.real());
    check_component(acc[slot + 1], exact.imag());
    slot += 2;
  }
  return res;
}

int cmd_verify_moments(const VerifyMomentsOptions& opt, std::ostream& out) {
  const std::vector<int> ds = parse_int_list(opt.d_list, "--d");
  for (int d : ds)
    if (d < 2) throw CLI::ValidationError("--d: second-moment formulas need d >= 2");

  Timer timer;
  constexpr double kOracleTol = 1e-12;
  bool all_ok = true;
  out << "verify-moments: seed=" << opt.seed << " mc-samples=" << opt.mc_samples
      << " tuples=" << opt.tuples << " queries=" << opt.queries << "\n";
  out << "  d   oracle-max-dev   mc-max|z|   checks   status\n";
  for (int d : ds) {
    double dev = 0.0;
    bool oracle_ok = true;
    std::string dev_str = "skipped";
    if (d <= kMaxSumOracleDim) {
      dev = oracle_max_deviation(d, opt.tuples, opt.seed);
      oracle_ok = dev <= kOracleTol;
      dev_str = fmt17(dev);
    }
    const MomentMcResult mc = moment_mc_check(d, opt.mc_samples, opt.queries, opt.seed);
    const bool mc_ok = mc.max_abs_z <= 3.0;
    all_ok = all_ok && oracle_ok && mc_ok;
    char line[160];
    std::snprintf(line, sizeof(line), "  %-3d %-16s %-11.3f %-8d %s\n", d, dev_str.c_str(),
                  mc.max_abs_z, mc.checks, (oracle_ok && mc_ok) ? "ok" : "FAIL");
    out << line;
  }
  out << (all_ok ? "all moment checks passed" : "moment checks FAILED") << " ("
      << format_seconds(timer.seconds()) << " s)\n";
  return all_ok ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------------------
// variance-sweep

struct VarianceSweepOptions {
  std::string cost = "state";
  std::string observable = "fock0";
  std::string target = "identity";
  int d_min = 2;
  int d_max = 8;
  std::string blocks = "5";
  int k = 3;
  int nu = 1;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 1;
  std::string regime = "uniform";
  std::string out_path = "variance_sweep.csv";
};

void write_sweep_csv(std::ostream& os, const SweepConfig& cfg, const std::vector<SweepRow>& rows,
                     const std::string& resolved) {
  os << "# snapvar " << kVersion << " variance-sweep\n";
  os << "# config: " << resolved << "\n";
  os << "# schema: cost,regime,d,T,k,nu,n_samples,mean,stderr_mean,variance,stderr_variance,"
        "analytic_variance,seed\n";
  os << "cost,regime,d,T,k,nu,n_samples,mean,stderr_mean,variance,stderr_variance,"
        "analytic_variance,seed\n";
  const std::string cost_kind = cfg.cost.kind == CostKind::state ? "state" : "gate";
  for (const auto& row : rows) {
    os << cost_kind << ',' << regime_name(cfg.regime) << ',' << row.d << ',' << row.t << ','
       << cfg.k << ',' << cfg.nu << ',' << row.stats.n_samples << ',' << fmt17(row.stats.mean)
       << ',' << fmt17(row.stats.stderr_mean) << ',' << fmt17(row.stats.variance) << ','
       << fmt17(row.stats.stderr_variance) << ',' << fmt17(row.analytic_variance) << ','
       << row.stats.master_seed << "\n";
  }
}

int cmd_variance_sweep(const VarianceSweepOptions& opt, std::ostream& out) {
  SweepConfig cfg;
  cfg.cost = make_cost_family(opt.cost, opt.observable, opt.target);
  if (opt.d_min < 2 || opt.d_max < opt.d_min) throw CLI::ValidationError("bad dimension range");
  for (int d = opt.d_min; d <= opt.d_max; ++d) cfg.d_values.push_back(d);
  cfg.t_values = parse_int_list(opt.blocks, "--blocks");
  cfg.k = opt.k;
  cfg.nu = opt.nu;
  cfg.n_samples = opt.samples;
  cfg.seed = opt.seed;
  const auto regime = parse_regime(opt.regime);
  if (!regime) throw CLI::ValidationError("--regime must be uniform, haar-factors or haar-blocks");
  cfg.regime = *regime;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError(e.what());
  }

  Timer timer;
  const std::vector<SweepRow> rows = run_sweep(cfg);

  std::ostringstream resolved;
  resolved << "cost=" << cfg.cost.description() << " regime=" << regime_name(cfg.regime)
           << " d=" << opt.d_min << ".." << opt.d_max << " blocks=" << opt.blocks << " k=" << cfg.k
           << " nu=" << cfg.nu << " samples=" << cfg.n_samples << " seed=" << cfg.seed
           << " alpha=[" << fmt17(cfg.alpha_lo) << "," << fmt17(cfg.alpha_hi) << ")";

  std::ofstream file(opt.out_path);
  if (!file) {
    std::ostringstream msg;
    msg << "cannot open " << opt.out_path << " for writing";
    out << msg.str() << "\n";
    return kExitFailure;
  }
  write_sweep_csv(file, cfg, rows, resolved.str());
  if (!file.good()) return kExitFailure;
  file.close();

  const SlopeFit fit = fit_loglog_slope(rows);
  out << "variance-sweep: " << resolved.str() << "\n";
  out << "rows: " << rows.size() << " -> " << opt.out_path << "\n";
  if (fit.n_points >= 2)
    out << "log-log variance decay slope vs d: " << fmt17(fit.slope) << " +- "
        << fmt17(fit.std_error) << " (" << fit.n_points << " points)\n";
  out << "elapsed: " << format_seconds(timer.seconds()) << " s\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// two-design

struct TwoDesignOptions {
  int d = 4;
  std::uint64_t pairs = 20000;
  std::uint64_t seed = 1;
  int nu = 1;
};

int cmd_two_design(const TwoDesignOptions& opt, std::ostream& out) {
  if (opt.d < 2) throw CLI::ValidationError("--d must be >= 2");
  if (opt.pairs < 1000) throw CLI::ValidationError("--pairs must be >= 1000");
  if (opt.nu < 0 || opt.nu >= opt.d) throw CLI::ValidationError("--nu must lie in [0, d-1]");

  Timer timer;
  const TwoDesignReport report = two_design_report(opt.d, opt.pairs, opt.seed, opt.nu);
  out << "two-design report: d=" << report.d << " nu=" << report.nu << " pairs=" << report.n_pairs
      << " seed=" << report.seed << "\n";
  out << "  ensemble   t   frame-potential   std-err      haar-ref     ratio\n";
  for (const auto& row : report.rows) {
    char line[200];
    std::snprintf(line, sizeof(line), "  %-9s %2d   %-15.8g %-12.3g %-12.8g %.4f\n",
                  row.ensemble.c_str(), row.t, row.value, row.std_error, row.haar_reference,
                  row.value / row.haar_reference);
    out << line;
  }
  out << "elapsed: " << format_seconds(timer.seconds()) << " s\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// compare-qubit-bound

struct CompareQubitBoundOptions {
  std::string a_list = "0.5,0.67";
  int d_min = 2;
  int d_max = 64;
  std::string observable = "number";
  std::uint64_t samples = 20000;
  std::uint64_t seed = 1;
  std::string out_path = "qubit_bound.csv";
};

int cmd_compare_qubit_bound(const CompareQubitBoundOptions& opt, std::ostream& out) {
  const std::vector<double> a_values = parse_double_list(opt.a_list, "--a");
  for (double a : a_values)
    if (!(a > 0.0 && a < 1.0)) throw CLI::ValidationError("--a values must lie in (0,1)");
  if (opt.d_min < 2 || opt.d_max < opt.d_min) throw CLI::ValidationError("bad dimension range");
  if (opt.observable != "number" && opt.observable != "fock0" &&
      opt.observable.rfind("file:", 0) != 0)
    throw CLI::ValidationError("--observable must be fock0, number or file:<path>");
  const bool is_number = opt.observable == "number";

  Timer timer;
  CostFamily family = make_cost_family("state", opt.observable, "identity");

  // Monte Carlo adjudication between the particle-number candidates; the
  // crossover below uses the winning candidate.
  std::optional<ParticleNumberAdjudication> adjudication;
  if (is_number) {
    const std::vector<int> adj_d = {3, 4, 5, 6};
    adjudication = adjudicate_particle_number(adj_d, opt.samples, opt.seed);
    out << "particle-number adjudication (haar-factors, N=" << opt.samples << "):\n";
    out << "  d    estimate        pn_closed_form z      pn_state_formula z    pn_weingarten z\n";
    for (const auto& pt : adjudication->points) {
      char line[200];
      std::snprintf(line, sizeof(line), "  %-4d %-15.8g %-21.2f %-21.2f %.2f\n", pt.d,
                    pt.stats.variance, pt.z_closed_form, pt.z_state_formula, pt.z_weingarten);
      out << line;
    }
    out << "adjudicated: " << formula_name(adjudication->winner)
        << (adjudication->winner_within_3sigma ? " (within 3 sigma at every point)"
                                               : " (nearest candidate; NOT within 3 sigma)")
        << "\n";
  }

  bool noted_non_power = false;
  std::ofstream file(opt.out_path);
  if (!file) {
    out << "cannot open " << opt.out_path << " for writing\n";
    return kExitFailure;
  }
  file << "# snapvar " << kVersion << " compare-qubit-bound\n";
  file << "# config: observable=" << opt.observable << " d=" << opt.d_min << ".." << opt.d_max
       << " a=" << opt.a_list << " samples=" << opt.samples << " seed=" << opt.seed << "\n";
  std::ostringstream header;
  header << "d,n_qubits,state_variance";
  if (is_number) header << ",pn_closed_form,pn_state_formula,pn_weingarten";
  for (double a : a_values) header << ",bound_a" << a;
  file << "# schema: " << header.str() << "\n" << header.str() << "\n";

  const auto adjudicated_value = [&](int d) {
    if (!is_number) return family.predicted_variance(d);
    return adjudication->winner == FormulaId::particle_number_closed_form
               ? particle_number_variance_closed_form(d)
               : particle_number_variance_state_formula(d);
  };

  std::vector<int> crossover(a_values.size(), -1);
  for (int d = opt.d_min; d <= opt.d_max; ++d) {
    const double n_qubits = std::log2(static_cast<double>(d));
    if (!noted_non_power && (d & (d - 1)) != 0) {
      out << "note: non-power-of-two dimensions use n = log2(d) in the bound curves\n";
      noted_non_power = true;
    }
    file << d << ',' << fmt17(n_qubits) << ',' << fmt17(family.predicted_variance(d));
    if (is_number)
      file << ',' << fmt17(particle_number_variance_closed_form(d)) << ','
           << fmt17(particle_number_variance_state_formula(d)) << ','
           << fmt17(particle_number_variance_weingarten(d));
    for (std::size_t ai = 0; ai < a_values.size(); ++ai) {
      const double bound = std::exp2(-a_values[ai] * n_qubits);
      file << ',' << fmt17(bound);
      // Monotone curves: first d where the qudit curve beats the bound.
      if (crossover[ai] < 0 && adjudicated_value(d) > bound) crossover[ai] = d;
    }
    file << "\n";
  }
  file.close();

  for (std::size_t ai = 0; ai < a_values.size(); ++ai) {
    out << "crossover (a=" << a_values[ai] << "): ";
    if (crossover[ai] > 0)
      out << "qudit variance exceeds the bound for d >= " << crossover[ai] << "\n";
    else
      out << "no crossover within d <= " << opt.d_max << "\n";
  }
  out << "rows -> " << opt.out_path << "\n";
  out << "elapsed: " << format_seconds(timer.seconds()) << " s\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"SNAP-displacement gradient variance toolkit"};
  app.set_version_flag("--version", std::string("snapvar ") + kVersion);
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "cap OpenMP worker count (results do not depend on it)");

  std::uint64_t seed_default = 0;
  try {
    seed_default = default_seed();
  } catch (const CLI::Error& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  VerifyMomentsOptions vm;
  vm.seed = seed_default;
  CLI::App* c_vm = app.add_subcommand("verify-moments", "closed forms vs summation oracles and Monte Carlo");
  c_vm->fallthrough();
  c_vm->add_option("--d", vm.d_list, "comma-separated dimensions (default 2,3,4)");
  c_vm->add_option("--mc-samples", vm.mc_samples, "Haar draws per dimension");
  c_vm->add_option("--tuples", vm.tuples, "random operator tuples per identity");
  c_vm->add_option("--queries", vm.queries, "random index queries per moment order");
  c_vm->add_option("--seed", vm.seed, "master seed");

  VarianceSweepOptions vs;
  vs.seed = seed_default;
  CLI::App* c_vs = app.add_subcommand("variance-sweep", "gradient mean/variance over a (d, T) grid");
  c_vs->fallthrough();
  c_vs->add_option("--cost", vs.cost, "state | gate");
  c_vs->add_option("--observable", vs.observable, "fock0 | number | file:<path>");
  c_vs->add_option("--target", vs.target, "identity | file:<path>");
  c_vs->add_option("--d-min", vs.d_min);
  c_vs->add_option("--d-max", vs.d_max);
  c_vs->add_option("--blocks", vs.blocks, "comma-separated block counts");
  c_vs->add_option("--k", vs.k, "1-based block index of the differentiated phase");
  c_vs->add_option("--nu", vs.nu, "0-based phase index");
  c_vs->add_option("--samples", vs.samples);
  c_vs->add_option("--seed", vs.seed);
  c_vs->add_option("--regime", vs.regime, "uniform | haar-factors | haar-blocks");
  c_vs->add_option("--out", vs.out_path, "output CSV path");

  TwoDesignOptions td;
  td.seed = seed_default;
  CLI::App* c_td = app.add_subcommand("two-design", "frame potentials of the gate ensembles");
  c_td->fallthrough();
  c_td->add_option("--d", td.d);
  c_td->add_option("--pairs", td.pairs);
  c_td->add_option("--seed", td.seed);
  c_td->add_option("--nu", td.nu, "partition index defining the w_a/w_b ensembles");

  CompareQubitBoundOptions cq;
  cq.seed = seed_default;
  CLI::App* c_cq = app.add_subcommand("compare-qubit-bound", "qudit variance curves vs 2^{-an}");
  c_cq->fallthrough();
  c_cq->add_option("--a", cq.a_list, "comma-separated decay rates in (0,1)");
  c_cq->add_option("--d-min", cq.d_min);
  c_cq->add_option("--d-max", cq.d_max);
  c_cq->add_option("--observable", cq.observable, "fock0 | number | file:<path>");
  c_cq->add_option("--samples", cq.samples, "adjudication sample count");
  c_cq->add_option("--seed", cq.seed);
  c_cq->add_option("--out", cq.out_path, "output CSV path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << app.version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  apply_threads(threads);
  try {
    if (c_vm->parsed()) return cmd_verify_moments(vm, out);
    if (c_vs->parsed()) return cmd_variance_sweep(vs, out);
    if (c_td->parsed()) return cmd_two_design(td, out);
    if (c_cq->parsed()) return cmd_compare_qubit_bound(cq, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << "\n";
    return kExitFailure;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace snapvar::cli
