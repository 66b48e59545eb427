#include <doctest.h>

#include <cmath>
#include <vector>

#include "snapvar/analytic.hpp"
#include "snapvar/rng.hpp"
#include "stats_util.hpp"

using namespace snapvar;

namespace {

ComplexMatrix random_hermitian(int d, RngStream& s) {
  ComplexMatrix m(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = s.complex_normal();
  ComplexMatrix h(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  return h;
}

}  // namespace

TEST_SUITE("analytic") {

TEST_CASE("state_variance closed cases") {
  CHECK(state_variance(ComplexMatrix::identity(3), 3) == doctest::Approx(0.0));
  CHECK(state_variance(ComplexMatrix::basis_projector(2, 0), 2) == doctest::Approx(1.0 / 9));
  for (int d : {2, 3, 5, 9}) {
    const double got = state_variance(ComplexMatrix::basis_projector(d, 0), d);
    CHECK(got == doctest::Approx(2.0 / (d * (d + 1.0) * (d + 1.0))).epsilon(1e-14));
  }
  CHECK_THROWS_AS(state_variance(ComplexMatrix::identity(1), 1), std::domain_error);
}

TEST_CASE("state_variance is nonnegative") {
  RngStream s(61, 0);
  for (int d : {2, 3, 4, 6, 8}) {
    for (int rep = 0; rep < 100; ++rep) {
      CHECK(state_variance(random_hermitian(d, s), d) >= -1e-12);
    }
  }
}

TEST_CASE("weingarten variant differs by the (d-1) vs d prefactor") {
  RngStream s(62, 0);
  for (int d : {2, 3, 7}) {
    const ComplexMatrix o = random_hermitian(d, s);
    const double a = state_variance(o, d);
    const double b = state_variance_weingarten(o, d);
    CHECK(b == doctest::Approx(a * (d - 1.0) / d).epsilon(1e-12));
  }
}

TEST_CASE("particle number observable") {
  const ComplexMatrix o2 = particle_number_observable(2);
  CHECK(o2(0, 0) == Complex(1.0, 0.0));
  CHECK(o2(1, 1) == Complex(0.0, 0.0));

  const ComplexMatrix o4 = particle_number_observable(4);
  CHECK(trace(o4).real() == doctest::Approx(6.0));
  CHECK(trace(matmul(o4, o4)).real() == doctest::Approx(14.0));

  // trace formulas d(d-1)/2 and d(d-1)(2d-1)/6 at larger d
  for (int d : {3, 7, 12}) {
    const ComplexMatrix o = particle_number_observable(d);
    CHECK(trace(o).real() == doctest::Approx(d * (d - 1.0) / 2.0));
    CHECK(trace(matmul(o, o)).real() == doctest::Approx(d * (d - 1.0) * (2.0 * d - 1.0) / 6.0));
  }

  CHECK(state_variance(particle_number_observable(2), 2) == doctest::Approx(1.0 / 9));
}

TEST_CASE("particle number closed forms") {
  CHECK(particle_number_variance_closed_form(2) == doctest::Approx(1.0 / 9));
  CHECK(particle_number_variance_closed_form(3) == doctest::Approx(0.25));
  CHECK(particle_number_variance_closed_form(1000000) == doctest::Approx(2.0 / 3).epsilon(1e-5));
  for (int d = 2; d < 40; ++d)
    CHECK(particle_number_variance_closed_form(d + 1) > particle_number_variance_closed_form(d));

  for (int d : {2, 3, 4, 6, 11}) {
    CHECK(particle_number_variance_state_formula(d) ==
          doctest::Approx(state_variance(particle_number_observable(d), d)).epsilon(1e-13));
    CHECK(particle_number_variance_weingarten(d) ==
          doctest::Approx(state_variance_weingarten(particle_number_observable(d), d)).epsilon(1e-13));
  }
  // the two spec candidates coincide only at d=2
  CHECK(particle_number_variance_state_formula(2) == doctest::Approx(1.0 / 9));
  CHECK(particle_number_variance_state_formula(3) != doctest::Approx(particle_number_variance_closed_form(3)));
}

TEST_CASE("gate_variance closed cases") {
  CHECK(gate_variance(2.0, 2) == doctest::Approx(78.0 / 1296.0).epsilon(1e-13));
  CHECK(gate_variance(ComplexMatrix::identity(2)) == doctest::Approx(78.0 / 1296.0).epsilon(1e-13));
  CHECK_THROWS_AS(gate_variance(3.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(gate_variance(1.0, 1), std::domain_error);
}

TEST_CASE("gate_variance positivity and tau shape") {
  for (int d = 2; d <= 32; ++d) {
    double min_val = 1e300;
    double at_tau1 = 0.0;
    for (double tau = 0.0; tau <= d + 1e-12; tau += d / 64.0) {
      const double v = gate_variance(tau, d);
      CHECK(v > 0.0);
      min_val = std::min(min_val, v);
    }
    at_tau1 = gate_variance(1.0, d);
    CHECK(at_tau1 <= min_val + 1e-18);  // tau^4 - 2 tau^2 is minimal at tau = 1
  }
}

TEST_CASE("gate_variance decays like d^-6 at tau=d") {
  // subleading terms steepen the finite-range fit; the slope approaches -6
  // from below as the window moves out
  std::vector<double> xs, ys;
  for (int d = 4; d <= 16; ++d) {
    xs.push_back(std::log(static_cast<double>(d)));
    ys.push_back(std::log(gate_variance(static_cast<double>(d), d)));
  }
  CHECK(test_stats::ols_slope(xs, ys).value == doctest::Approx(-6.1494558).epsilon(1e-4));

  xs.clear();
  ys.clear();
  for (int d = 16; d <= 64; d += 4) {
    xs.push_back(std::log(static_cast<double>(d)));
    ys.push_back(std::log(gate_variance(static_cast<double>(d), d)));
  }
  CHECK(std::abs(test_stats::ols_slope(xs, ys).value + 6.0) <= 0.05);
}

TEST_CASE("gate_variance_weingarten") {
  CHECK(gate_variance_weingarten(2) == doctest::Approx(1.0 / 24).epsilon(1e-14));
  // decays like d^-5
  std::vector<double> xs, ys;
  for (int d = 4; d <= 16; ++d) {
    xs.push_back(std::log(static_cast<double>(d)));
    ys.push_back(std::log(gate_variance_weingarten(d)));
  }
  CHECK(std::abs(test_stats::ols_slope(xs, ys).value + 5.0) <= 0.15);
}

TEST_CASE("qubit_bound") {
  CHECK(qubit_bound(2, 0.5) == doctest::Approx(0.5));
  CHECK(qubit_bound(4, 0.5) == doctest::Approx(0.25));
  for (int n = 1; n < 12; ++n) CHECK(qubit_bound(n + 1, 0.67) < qubit_bound(n, 0.67));
  CHECK_THROWS_AS(qubit_bound(0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(qubit_bound(2, 1.5), std::invalid_argument);
}

TEST_CASE("advantage_condition") {
  CHECK(!advantage_condition(ComplexMatrix::identity(4), 2, 0.75));
  for (int n = 1; n <= 5; ++n)
    CHECK(!advantage_condition(ComplexMatrix::basis_projector(1 << n, 0), n, 0.75));
  CHECK_THROWS_AS(advantage_condition(ComplexMatrix::identity(3), 2, 0.75), std::invalid_argument);

  // whenever true, the qudit variance beats the qubit bound
  RngStream s(63, 0);
  int triggered = 0;
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 1 + static_cast<int>(s.next_u64() % 3);
    const int d = 1 << n;
    ComplexMatrix o(d);
    for (int i = 0; i < d; ++i) o(i, i) = s.uniform(-40.0, 40.0);
    const double a = 0.51 + 0.48 * s.uniform();
    if (advantage_condition(o, n, a)) {
      ++triggered;
      CHECK(state_variance(o, d) > qubit_bound(n, a));
    }
  }
  CHECK(triggered > 0);
}

TEST_CASE("formula names") {
  CHECK(formula_name(FormulaId::state_cost) == "state_cost");
  CHECK(formula_name(FormulaId::particle_number_closed_form) == "pn_closed_form");
  CHECK(formula_name(FormulaId::particle_number_state_formula) == "pn_state_formula");
  CHECK(formula_name(FormulaId::particle_number_weingarten) == "pn_weingarten");
  CHECK(formula_name(FormulaId::qubit_bound) == "qubit_bound");
}

}  // TEST_SUITE
