#pragma once

#include <string>

#include "snapvar/linalg.hpp"

namespace snapvar {

/// Closed-form gradient-variance predictions. The *_weingarten variants are
/// obtained by evaluating the Haar moment integrals directly; they are kept
/// alongside the primary closed forms so the Monte Carlo estimators can
/// adjudicate between candidates instead of silently trusting either.
enum class FormulaId {
  state_cost,
  state_cost_weingarten,
  gate_cost,
  gate_cost_weingarten,
  particle_number_closed_form,
  particle_number_state_formula,
  particle_number_weingarten,
  qubit_bound,
};

std::string formula_name(FormulaId id);

struct VariancePrediction {
  int d = 0;
  double value = 0.0;
  FormulaId id = FormulaId::state_cost;
};

/// Haar-factor variance of the state-cost gradient:
/// 2/((d-1)(d+1)^2) * (tr O^2 - (tr O)^2 / d).
double state_variance(const ComplexMatrix& observable, int d);

/// Same quantity assembled term by term from the Haar moment integrals:
/// 2/(d(d+1)^2) * (tr O^2 - (tr O)^2 / d). Differs from state_variance by
/// the (d-1) vs d prefactor; the sampling estimators decide which one the
/// protocol follows.
double state_variance_weingarten(const ComplexMatrix& observable, int d);

/// diag(d-1, d-2, ..., 0).
ComplexMatrix particle_number_observable(int d);

/// Standalone closed form (2d-3)/(3d+3) for the particle-number observable.
double particle_number_variance_closed_form(int d);

/// state_variance at the particle-number observable, simplified: d/(6(d+1)).
double particle_number_variance_state_formula(int d);

/// state_variance_weingarten at the particle-number observable: (d-1)/(6(d+1)).
double particle_number_variance_weingarten(int d);

/// Haar-factor variance of the gate-cost gradient as a function of the
/// target's trace modulus tau = |tr Ut| (the formula depends on the target
/// only through tau):
/// 2(d^6+d^5-4d^4-3d^3+5d^2+2d-1)/(d^4(d^2-1)^4) + 2(tau^4-2tau^2)/(d^4(d^2-1)^4).
double gate_variance(double target_trace_modulus, int d);
double gate_variance(const ComplexMatrix& target);

/// Direct moment-integral evaluation: 2/(d^4(d+1)), independent of the target.
double gate_variance_weingarten(int d);

/// Multi-qubit reference decay 2^{-a n}.
double qubit_bound(int n_qubits, double a);

/// tr(O^2) - 2^{-n} (tr O)^2 > 2^{(3-a)n+1}; when true the qudit state-cost
/// variance exceeds qubit_bound(n, a).
bool advantage_condition(const ComplexMatrix& observable, int n_qubits, double a);

}  // namespace snapvar
