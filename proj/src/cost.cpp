#include "snapvar/cost.hpp"

#include <cmath>
#include <stdexcept>

namespace snapvar {

namespace {

void check_density_matrix(const ComplexMatrix& rho) {
  if (!is_hermitian(rho, tol::hermitian)) throw std::invalid_argument("rho0 must be Hermitian");
  if (std::abs(trace(rho) - Complex(1.0, 0.0)) > tol::hermitian)
    throw std::invalid_argument("rho0 must have unit trace");
  EigResult e = hermitian_eig(rho);
  for (double lambda : e.eigenvalues)
    if (lambda < -tol::hermitian) throw std::invalid_argument("rho0 must be positive semidefinite");
}

void check_dims(int a, int b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

}  // namespace

StateCost::StateCost(ComplexMatrix obs) : StateCost(std::move(obs), ComplexMatrix{}) {}

StateCost::StateCost(ComplexMatrix obs, ComplexMatrix rho) : observable(std::move(obs)) {
  if (observable.has_nonfinite()) throw std::invalid_argument("observable has non-finite entries");
  if (!is_hermitian(observable, tol::hermitian))
    throw std::invalid_argument("observable must be Hermitian");
  if (rho.dim() == 0) rho = ComplexMatrix::basis_projector(observable.dim(), 0);
  check_dims(observable.dim(), rho.dim(), "StateCost");
  check_density_matrix(rho);
  rho0 = std::move(rho);
}

GateCost::GateCost(ComplexMatrix t) : target(std::move(t)) {
  if (target.has_nonfinite()) throw std::invalid_argument("target has non-finite entries");
  if (!is_unitary(target, tol::unitary)) throw std::invalid_argument("target must be unitary");
}

int cost_dim(const CostSpec& spec) {
  return std::visit([](const auto& s) { return s.dim(); }, spec);
}

double state_cost(const StateCost& spec, const AnsatzParams& p) {
  check_dims(spec.dim(), p.dim(), "state_cost");
  const ComplexMatrix u = ansatz(p);
  const Complex t = trace(matmul(spec.observable, matmul(u, matmul(spec.rho0, adjoint(u)))));
  if (std::abs(t.imag()) > tol::imag_residue)
    throw std::runtime_error("state_cost: trace has a non-negligible imaginary part");
  return 1.0 - t.real();
}

double gate_cost(const GateCost& spec, const AnsatzParams& p) {
  check_dims(spec.dim(), p.dim(), "gate_cost");
  const int d = spec.dim();
  const Complex t = trace(matmul(adjoint(spec.target), ansatz(p)));
  return 1.0 - std::norm(t) / (static_cast<double>(d) * d);
}

double cost_value(const CostSpec& spec, const AnsatzParams& p) {
  if (std::holds_alternative<StateCost>(spec)) return state_cost(std::get<StateCost>(spec), p);
  return gate_cost(std::get<GateCost>(spec), p);
}

double state_gradient_from_factors(const ComplexMatrix& observable, const ComplexMatrix& rho0,
                                   const ComplexMatrix& u_r, const ComplexMatrix& w_a,
                                   const ComplexMatrix& w_b, const ComplexMatrix& u_l, int nu) {
  const int d = observable.dim();
  if (nu < 0 || nu >= d) throw std::out_of_range("state gradient: nu out of range");
  // B = w_a^+ u_r^+ O u_r w_a, M = w_b u_l rho0 u_l^+ w_b^+,
  // dC = -i tr(B [rho_nu, M]) = -i ((M B)_{nu,nu} - (B M)_{nu,nu}).
  const ComplexMatrix n = matmul(u_r, w_a);
  const ComplexMatrix b = matmul(adjoint(n), matmul(observable, n));
  const ComplexMatrix kmat = matmul(w_b, u_l);
  const ComplexMatrix m = matmul(kmat, matmul(rho0, adjoint(kmat)));

  Complex mb = 0.0, bm = 0.0;
  for (int i = 0; i < d; ++i) {
    mb += m(nu, i) * b(i, nu);
    bm += b(nu, i) * m(i, nu);
  }
  const Complex g = Complex(0.0, -1.0) * (mb - bm);
  if (std::abs(g.imag()) > tol::imag_residue)
    throw std::runtime_error("state gradient: non-negligible imaginary residue");
  return g.real();
}

double gate_gradient_from_factors(const ComplexMatrix& target, const ComplexMatrix& u_r,
                                  const ComplexMatrix& w_a, const ComplexMatrix& w_b,
                                  const ComplexMatrix& u_l, int nu) {
  const int d = target.dim();
  if (nu < 0 || nu >= d) throw std::out_of_range("gate gradient: nu out of range");
  // z = tr(Ut^+ U),  G = tr(Ut^+ u_r w_a rho_nu w_b u_l),
  // dC = -(i/d^2) (G conj(z) - conj(G conj(z))).
  const ComplexMatrix n = matmul(u_r, w_a);
  const ComplexMatrix kmat = matmul(w_b, u_l);
  const ComplexMatrix u = matmul(n, kmat);
  const ComplexMatrix tdag = adjoint(target);
  const Complex z = trace(matmul(tdag, u));

  // u_r w_a rho_nu w_b u_l is rank one: column nu of n times row nu of kmat.
  Complex g_trace = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g_trace += tdag(i, j) * n(j, nu) * kmat(nu, i);

  const Complex w = g_trace * std::conj(z);
  const Complex g = Complex(0.0, -1.0) * (w - std::conj(w)) / (static_cast<double>(d) * d);
  if (std::abs(g.imag()) > tol::imag_residue)
    throw std::runtime_error("gate gradient: non-negligible imaginary residue");
  return g.real();
}

double grad_state_cost(const StateCost& spec, const AnsatzParams& p, GradientRequest r) {
  check_dims(spec.dim(), p.dim(), "grad_state_cost");
  const SplitAnsatz s = split_ansatz(p, r.k);
  const BlockPartition part = partition_block(s.b, r.nu);
  return state_gradient_from_factors(spec.observable, spec.rho0, s.u_r, part.w_a, part.w_b, s.u_l,
                                     r.nu);
}

double grad_gate_cost(const GateCost& spec, const AnsatzParams& p, GradientRequest r) {
  check_dims(spec.dim(), p.dim(), "grad_gate_cost");
  const SplitAnsatz s = split_ansatz(p, r.k);
  const BlockPartition part = partition_block(s.b, r.nu);
  return gate_gradient_from_factors(spec.target, s.u_r, part.w_a, part.w_b, s.u_l, r.nu);
}

double grad_cost(const CostSpec& spec, const AnsatzParams& p, GradientRequest r) {
  if (std::holds_alternative<StateCost>(spec)) return grad_state_cost(std::get<StateCost>(spec), p, r);
  return grad_gate_cost(std::get<GateCost>(spec), p, r);
}

double fd_gradient(const std::function<double(const AnsatzParams&)>& cost, const AnsatzParams& p,
                   GradientRequest r, double h) {
  if (h <= 0.0) throw std::invalid_argument("fd_gradient: step must be positive");
  if (r.k < 1 || r.k > p.num_blocks() || r.nu < 0 || r.nu >= p.dim())
    throw std::out_of_range("fd_gradient: request out of range");
  AnsatzParams plus = p;
  plus.blocks[r.k - 1].thetas[r.nu] += h;
  AnsatzParams minus = p;
  minus.blocks[r.k - 1].thetas[r.nu] -= h;
  return (cost(plus) - cost(minus)) / (2.0 * h);
}

}  // namespace snapvar
