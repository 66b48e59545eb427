#pragma once

#include <functional>
#include <variant>

#include "snapvar/gates.hpp"
#include "snapvar/linalg.hpp"

namespace snapvar {

/// State/observable cost 1 - tr(O U rho0 U^+). Validated on construction:
/// O Hermitian, rho0 a density matrix. rho0 defaults to |0><0|.
struct StateCost {
  ComplexMatrix observable;
  ComplexMatrix rho0;

  explicit StateCost(ComplexMatrix obs);
  StateCost(ComplexMatrix obs, ComplexMatrix rho);
  int dim() const { return observable.dim(); }
};

/// Gate cost 1 - |tr(Ut^+ U)/d|^2. Target validated unitary.
struct GateCost {
  ComplexMatrix target;

  explicit GateCost(ComplexMatrix t);
  int dim() const { return target.dim(); }
};

using CostSpec = std::variant<StateCost, GateCost>;

int cost_dim(const CostSpec& spec);

/// Which SNAP phase to differentiate: block k (1-based), phase nu (0-based).
struct GradientRequest {
  int k = 1;
  int nu = 0;
};

double state_cost(const StateCost& spec, const AnsatzParams& p);
double gate_cost(const GateCost& spec, const AnsatzParams& p);
double cost_value(const CostSpec& spec, const AnsatzParams& p);

/// Exact partial derivatives of the costs with respect to theta_{k,nu},
/// evaluated through the commutator/trace expressions so the same code path
/// serves the Haar-substituted estimators.
double grad_state_cost(const StateCost& spec, const AnsatzParams& p, GradientRequest r);
double grad_gate_cost(const GateCost& spec, const AnsatzParams& p, GradientRequest r);
double grad_cost(const CostSpec& spec, const AnsatzParams& p, GradientRequest r);

/// Gradient from explicit factors U = u_r * (w_a w_b) * u_l. This is the
/// single expression both the exact gradients and the Haar-factor sampling
/// regimes evaluate.
double state_gradient_from_factors(const ComplexMatrix& observable, const ComplexMatrix& rho0,
                                   const ComplexMatrix& u_r, const ComplexMatrix& w_a,
                                   const ComplexMatrix& w_b, const ComplexMatrix& u_l, int nu);
double gate_gradient_from_factors(const ComplexMatrix& target, const ComplexMatrix& u_r,
                                  const ComplexMatrix& w_a, const ComplexMatrix& w_b,
                                  const ComplexMatrix& u_l, int nu);

/// Central finite difference (C(theta+h) - C(theta-h)) / 2h at the requested
/// coordinate; the independent oracle for every analytic gradient.
double fd_gradient(const std::function<double(const AnsatzParams&)>& cost, const AnsatzParams& p,
                   GradientRequest r, double h = 1e-5);

}  // namespace snapvar
