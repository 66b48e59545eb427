#include <doctest.h>

#include <cmath>
#include <numbers>

#include "snapvar/cost.hpp"
#include "snapvar/haar.hpp"
#include "snapvar/rng.hpp"

using namespace snapvar;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

AnsatzParams random_ansatz(int d, int t, RngStream& s) {
  AnsatzParams p;
  for (int i = 0; i < t; ++i) {
    BlockParams b;
    b.alpha = s.uniform(0.0, kTwoPi);
    b.thetas.resize(d);
    for (int n = 0; n < d; ++n) b.thetas[n] = s.uniform(0.0, kTwoPi);
    p.blocks.push_back(std::move(b));
  }
  return p;
}

AnsatzParams identity_ansatz(int d, int t) {
  AnsatzParams p;
  for (int i = 0; i < t; ++i) {
    BlockParams b;
    b.alpha = 0.0;
    b.thetas.assign(d, 0.0);
    p.blocks.push_back(std::move(b));
  }
  return p;
}

ComplexMatrix random_hermitian(int d, RngStream& s) {
  ComplexMatrix h(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) h(i, j) = s.complex_normal();
  ComplexMatrix out(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) out(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
  return out;
}

}  // namespace

TEST_SUITE("cost") {

TEST_CASE("spec validation") {
  ComplexMatrix not_hermitian(2);
  not_hermitian(0, 1) = 1.0;
  CHECK_THROWS_AS((void)StateCost(not_hermitian), std::invalid_argument);

  ComplexMatrix bad_rho = ComplexMatrix::identity(2);  // trace 2
  CHECK_THROWS_AS((void)StateCost(ComplexMatrix::identity(2), bad_rho), std::invalid_argument);

  ComplexMatrix negative(2);
  negative(0, 0) = 2.0;
  negative(1, 1) = -1.0;
  CHECK_THROWS_AS((void)StateCost(ComplexMatrix::identity(2), negative), std::invalid_argument);

  CHECK_THROWS_AS((void)GateCost(ComplexMatrix(2)), std::invalid_argument);

  // default rho0 is the vacuum projector
  const StateCost sc(ComplexMatrix::identity(3));
  CHECK(sc.rho0(0, 0) == Complex(1.0, 0.0));
  CHECK(std::abs(trace(sc.rho0) - Complex(1.0, 0.0)) == 0.0);
}

TEST_CASE("state_cost closed cases") {
  const StateCost spec(ComplexMatrix::basis_projector(2, 0));
  CHECK(state_cost(spec, identity_ansatz(2, 1)) == doctest::Approx(0.0).epsilon(1e-12));

  // theta = (pi, pi) makes the block -I on d=2? No: it makes S = -I which is
  // still proportional to identity; instead displace by pi/2 to swap levels.
  AnsatzParams swap;
  BlockParams b;
  b.alpha = 0.0;
  b.thetas = {0.0, std::numbers::pi};
  swap.blocks.push_back(b);
  // U = diag(1,-1) keeps |0> fixed: cost 0
  CHECK(state_cost(spec, swap) == doctest::Approx(0.0).epsilon(1e-12));

  RngStream s(21, 0);
  const StateCost identity_obs(ComplexMatrix::identity(4));
  for (int rep = 0; rep < 5; ++rep)
    CHECK(state_cost(identity_obs, random_ansatz(4, 3, s)) == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("orthogonal image gives unit state cost") {
  // via factors: U maps |0> to |1>, observable |0><0|
  const ComplexMatrix obs = ComplexMatrix::basis_projector(2, 0);
  ComplexMatrix x(2);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  const Complex t = trace(matmul(obs, matmul(x, matmul(ComplexMatrix::basis_projector(2, 0), adjoint(x)))));
  CHECK(1.0 - t.real() == doctest::Approx(1.0));
}

TEST_CASE("gate_cost closed cases") {
  RngStream s(22, 0);
  const AnsatzParams p = random_ansatz(3, 2, s);
  const GateCost self(ansatz(p));
  CHECK(gate_cost(self, p) == doctest::Approx(0.0).epsilon(1e-10));

  ComplexMatrix phased = ansatz(p);
  phased *= std::polar(1.0, 0.7);
  CHECK(gate_cost(GateCost(phased), p) == doctest::Approx(0.0).epsilon(1e-10));

  AnsatzParams z;
  BlockParams b;
  b.alpha = 0.0;
  b.thetas = {0.0, std::numbers::pi};
  z.blocks.push_back(b);
  CHECK(gate_cost(GateCost(ComplexMatrix::identity(2)), z) == doctest::Approx(1.0).epsilon(1e-12));

  for (int rep = 0; rep < 10; ++rep) {
    const double c = gate_cost(GateCost(ComplexMatrix::identity(3)), random_ansatz(3, 2, s));
    CHECK(c >= 0.0);
    CHECK(c <= 1.0);
  }
}

TEST_CASE("grad_state_cost vanishes on co-diagonal configurations") {
  const StateCost spec(ComplexMatrix::basis_projector(2, 0));
  const AnsatzParams p = identity_ansatz(2, 1);
  for (int nu = 0; nu < 2; ++nu)
    CHECK(std::abs(grad_state_cost(spec, p, {1, nu})) <= 1e-14);
}

TEST_CASE("grad_state_cost matches finite differences") {
  RngStream s(23, 0);
  for (int rep = 0; rep < 40; ++rep) {
    const int d = 2 + static_cast<int>(s.next_u64() % 5);
    const int t = 1 + static_cast<int>(s.next_u64() % 4);
    const StateCost spec(random_hermitian(d, s));
    const AnsatzParams p = random_ansatz(d, t, s);
    const GradientRequest r{1 + static_cast<int>(s.next_u64() % t),
                            static_cast<int>(s.next_u64() % d)};
    const double analytic = grad_state_cost(spec, p, r);
    const double fd =
        fd_gradient([&](const AnsatzParams& q) { return state_cost(spec, q); }, p, r);
    CHECK(std::abs(analytic - fd) <= 1e-7);
  }
}

TEST_CASE("grad_state_cost agrees with the alternative commutator ordering") {
  RngStream s(24, 0);
  for (int rep = 0; rep < 20; ++rep) {
    const int d = 2 + static_cast<int>(s.next_u64() % 4);
    const StateCost spec(random_hermitian(d, s));
    const AnsatzParams p = random_ansatz(d, 3, s);
    const GradientRequest r{2, static_cast<int>(s.next_u64() % d)};

    const double primary = grad_state_cost(spec, p, r);

    // -i tr([B, rho_nu] M) instead of -i tr(B [rho_nu, M])
    const SplitAnsatz sp = split_ansatz(p, r.k);
    const BlockPartition part = partition_block(sp.b, r.nu);
    const ComplexMatrix n = matmul(sp.u_r, part.w_a);
    const ComplexMatrix bmat = matmul(adjoint(n), matmul(spec.observable, n));
    const ComplexMatrix kmat = matmul(part.w_b, sp.u_l);
    const ComplexMatrix mmat = matmul(kmat, matmul(spec.rho0, adjoint(kmat)));
    const ComplexMatrix rho_nu = ComplexMatrix::basis_projector(d, r.nu);
    const ComplexMatrix comm = matmul(bmat, rho_nu) - matmul(rho_nu, bmat);
    const Complex alt = Complex(0.0, -1.0) * trace(matmul(comm, mmat));
    CHECK(std::abs(alt.imag()) <= 1e-10);
    CHECK(std::abs(primary - alt.real()) <= 1e-10);
  }
}

TEST_CASE("grad_state_cost is identically zero for the identity observable") {
  RngStream s(25, 0);
  const StateCost spec(ComplexMatrix::identity(4));
  for (int rep = 0; rep < 10; ++rep) {
    const AnsatzParams p = random_ansatz(4, 3, s);
    CHECK(std::abs(grad_state_cost(spec, p, {2, 1})) <= 1e-10);
  }
}

TEST_CASE("grad_gate_cost matches finite differences") {
  RngStream s(26, 0);
  for (int rep = 0; rep < 40; ++rep) {
    const int d = 2 + static_cast<int>(s.next_u64() % 5);
    const int t = 1 + static_cast<int>(s.next_u64() % 4);
    const GateCost spec(haar_unitary(d, s));
    const AnsatzParams p = random_ansatz(d, t, s);
    const GradientRequest r{1 + static_cast<int>(s.next_u64() % t),
                            static_cast<int>(s.next_u64() % d)};
    const double analytic = grad_gate_cost(spec, p, r);
    const double fd = fd_gradient([&](const AnsatzParams& q) { return gate_cost(spec, q); }, p, r);
    CHECK(std::abs(analytic - fd) <= 1e-7);
  }
}

TEST_CASE("grad_gate_cost at a realized target") {
  RngStream s(27, 0);
  const AnsatzParams p = random_ansatz(3, 3, s);
  const GateCost spec(ansatz(p));
  for (int nu = 0; nu < 3; ++nu) {
    const GradientRequest r{2, nu};
    const double analytic = grad_gate_cost(spec, p, r);
    const double fd = fd_gradient([&](const AnsatzParams& q) { return gate_cost(spec, q); }, p, r);
    CHECK(std::abs(analytic - fd) <= 1e-7);
  }
}

TEST_CASE("grad_gate_cost hand case d=2") {
  AnsatzParams p;
  BlockParams b;
  b.alpha = 0.0;
  b.thetas = {0.0, 0.0};
  p.blocks.push_back(b);
  const double phi = 0.9;
  ComplexMatrix target(2);
  target(0, 0) = 1.0;
  target(1, 1) = std::polar(1.0, phi);
  const GateCost spec(target);
  const GradientRequest r{1, 1};
  const double analytic = grad_gate_cost(spec, p, r);
  const double fd = fd_gradient([&](const AnsatzParams& q) { return gate_cost(spec, q); }, p, r);
  CHECK(std::abs(analytic - fd) <= 1e-9);
}

TEST_CASE("grad_gate_cost is invariant under a global target phase") {
  RngStream s(28, 0);
  for (int rep = 0; rep < 10; ++rep) {
    const int d = 2 + static_cast<int>(s.next_u64() % 4);
    const ComplexMatrix u = haar_unitary(d, s);
    ComplexMatrix phased = u;
    phased *= std::polar(1.0, s.uniform(0.0, kTwoPi));
    const AnsatzParams p = random_ansatz(d, 2, s);
    const GradientRequest r{1, static_cast<int>(s.next_u64() % d)};
    CHECK(std::abs(grad_gate_cost(GateCost(u), p, r) - grad_gate_cost(GateCost(phased), p, r)) <=
          1e-10);
  }
}

TEST_CASE("fd_gradient basics") {
  const StateCost spec(ComplexMatrix::identity(2));
  const AnsatzParams p = identity_ansatz(2, 1);
  CHECK(fd_gradient([](const AnsatzParams&) { return 0.25; }, p, {1, 0}) == 0.0);

  // cost 1 - cos(theta_0) has a stationary point at 0
  const auto cosine = [](const AnsatzParams& q) { return 1.0 - std::cos(q.blocks[0].thetas[0]); };
  CHECK(std::abs(fd_gradient(cosine, p, {1, 0})) <= 1e-10);

  CHECK_THROWS_AS(fd_gradient(cosine, p, {1, 0}, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(fd_gradient(cosine, p, {5, 0}), std::out_of_range);
}

TEST_CASE("gradient requests out of range") {
  RngStream s(29, 0);
  const StateCost spec(random_hermitian(3, s));
  const AnsatzParams p = random_ansatz(3, 2, s);
  CHECK_THROWS_AS(grad_state_cost(spec, p, {0, 0}), std::out_of_range);
  CHECK_THROWS_AS(grad_state_cost(spec, p, {3, 0}), std::out_of_range);
  CHECK_THROWS_AS(grad_state_cost(spec, p, {1, 3}), std::out_of_range);
}

}  // TEST_SUITE
