#include "snapvar/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace snapvar {

std::string formula_name(FormulaId id) {
  switch (id) {
    case FormulaId::state_cost: return "state_cost";
    case FormulaId::state_cost_weingarten: return "state_cost_weingarten";
    case FormulaId::gate_cost: return "gate_cost";
    case FormulaId::gate_cost_weingarten: return "gate_cost_weingarten";
    case FormulaId::particle_number_closed_form: return "pn_closed_form";
    case FormulaId::particle_number_state_formula: return "pn_state_formula";
    case FormulaId::particle_number_weingarten: return "pn_weingarten";
    case FormulaId::qubit_bound: return "qubit_bound";
  }
  return "unknown";
}

namespace {

double observable_spread(const ComplexMatrix& observable, int d) {
  if (observable.dim() != d) throw std::invalid_argument("state_variance: dimension mismatch");
  if (!is_hermitian(observable, tol::hermitian))
    throw std::invalid_argument("state_variance: observable must be Hermitian");
  const double tr_o = trace(observable).real();
  const double tr_o2 = trace(matmul(observable, observable)).real();
  return tr_o2 - tr_o * tr_o / d;
}

}  // namespace

double state_variance(const ComplexMatrix& observable, int d) {
  if (d < 2) throw std::domain_error("state_variance: requires d >= 2");
  const double n = d;
  return 2.0 / ((n - 1.0) * (n + 1.0) * (n + 1.0)) * observable_spread(observable, d);
}

double state_variance_weingarten(const ComplexMatrix& observable, int d) {
  if (d < 2) throw std::domain_error("state_variance_weingarten: requires d >= 2");
  const double n = d;
  return 2.0 / (n * (n + 1.0) * (n + 1.0)) * observable_spread(observable, d);
}

ComplexMatrix particle_number_observable(int d) {
  if (d < 1) throw std::invalid_argument("particle_number_observable: dimension must be >= 1");
  ComplexMatrix o(d);
  for (int i = 0; i < d; ++i) o(i, i) = static_cast<double>(d - 1 - i);
  return o;
}

double particle_number_variance_closed_form(int d) {
  if (d < 2) throw std::domain_error("particle_number_variance_closed_form: requires d >= 2");
  return (2.0 * d - 3.0) / (3.0 * d + 3.0);
}

double particle_number_variance_state_formula(int d) {
  if (d < 2) throw std::domain_error("particle_number_variance_state_formula: requires d >= 2");
  return d / (6.0 * (d + 1.0));
}

double particle_number_variance_weingarten(int d) {
  if (d < 2) throw std::domain_error("particle_number_variance_weingarten: requires d >= 2");
  return (d - 1.0) / (6.0 * (d + 1.0));
}

double gate_variance(double target_trace_modulus, int d) {
  if (d < 2) throw std::domain_error("gate_variance: requires d >= 2");
  const double n = d;
  if (target_trace_modulus < 0.0 || target_trace_modulus > n + tol::unitary)
    throw std::invalid_argument("gate_variance: trace modulus of a unitary is bounded by d");
  const double tau2 = target_trace_modulus * target_trace_modulus;
  const double poly = 2.0 * (std::pow(n, 6) + std::pow(n, 5) - 4.0 * std::pow(n, 4) -
                             3.0 * std::pow(n, 3) + 5.0 * n * n + 2.0 * n - 1.0);
  const double denom = std::pow(n, 4) * std::pow(n * n - 1.0, 4);
  return poly / denom + 2.0 * (tau2 * tau2 - 2.0 * tau2) / denom;
}

double gate_variance(const ComplexMatrix& target) {
  if (!is_unitary(target, tol::unitary)) throw std::invalid_argument("gate_variance: target must be unitary");
  return gate_variance(std::abs(trace(target)), target.dim());
}

double gate_variance_weingarten(int d) {
  if (d < 2) throw std::domain_error("gate_variance_weingarten: requires d >= 2");
  const double n = d;
  return 2.0 / (std::pow(n, 4) * (n + 1.0));
}

double qubit_bound(int n_qubits, double a) {
  if (n_qubits < 1) throw std::invalid_argument("qubit_bound: n must be >= 1");
  if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("qubit_bound: a must lie in (0,1)");
  return std::exp2(-a * n_qubits);
}

bool advantage_condition(const ComplexMatrix& observable, int n_qubits, double a) {
  if (!(a > 0.5 && a < 1.0)) throw std::invalid_argument("advantage_condition: a must lie in (0.5,1)");
  const int d = observable.dim();
  if (d != (1 << n_qubits))
    throw std::invalid_argument("advantage_condition: observable dimension must be 2^n");
  if (!is_hermitian(observable, tol::hermitian))
    throw std::invalid_argument("advantage_condition: observable must be Hermitian");
  const double tr_o = trace(observable).real();
  const double tr_o2 = trace(matmul(observable, observable)).real();
  const double lhs = tr_o2 - std::exp2(-n_qubits) * tr_o * tr_o;
  const double rhs = std::exp2((3.0 - a) * n_qubits + 1.0);
  return lhs > rhs;
}

}  // namespace snapvar
