#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "snapvar/gates.hpp"
#include "snapvar/rng.hpp"

using namespace snapvar;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

BlockParams random_block(int d, RngStream& s) {
  BlockParams p;
  p.alpha = s.uniform(0.0, kTwoPi);
  p.thetas.resize(d);
  for (int n = 0; n < d; ++n) p.thetas[n] = s.uniform(0.0, kTwoPi);
  return p;
}

AnsatzParams random_ansatz(int d, int t, RngStream& s) {
  AnsatzParams p;
  for (int i = 0; i < t; ++i) p.blocks.push_back(random_block(d, s));
  return p;
}

}  // namespace

TEST_SUITE("gates") {

TEST_CASE("lowering and raising") {
  CHECK(frobenius_norm(lowering(1)) == 0.0);

  const ComplexMatrix a2 = lowering(2);
  CHECK(a2(0, 1) == Complex(1.0, 0.0));
  CHECK(a2(1, 0) == Complex(0.0, 0.0));

  const ComplexMatrix a3 = lowering(3);
  CHECK(a3(0, 1) == Complex(1.0, 0.0));
  CHECK(std::abs(a3(1, 2) - Complex(std::numbers::sqrt2, 0.0)) == 0.0);

  CHECK(frobenius_distance(raising(3), adjoint(lowering(3))) == 0.0);
  CHECK(std::abs(raising(3)(2, 1) - Complex(std::numbers::sqrt2, 0.0)) == 0.0);
}

TEST_CASE("displacement closed forms") {
  for (int d : {1, 2, 5}) CHECK(frobenius_distance(displacement(0.0, d), ComplexMatrix::identity(d)) == 0.0);

  ComplexMatrix want(2);
  want(0, 1) = 1.0;
  want(1, 0) = -1.0;
  CHECK(frobenius_distance(displacement(std::numbers::pi / 2, 2), want) <= 1e-10);

  RngStream s(31, 0);
  for (int d : {2, 3, 7}) {
    const double alpha = s.uniform(-3.0, 3.0);
    CHECK(frobenius_distance(matmul(displacement(alpha, d), displacement(-alpha, d)),
                             ComplexMatrix::identity(d)) <= 1e-9);
  }
}

TEST_CASE("displacement matches the generic exponential") {
  RngStream s(32, 0);
  for (int d : {2, 4, 9}) {
    const double alpha = s.uniform(0.0, kTwoPi);
    ComplexMatrix g = lowering(d);
    g -= raising(d);
    g *= Complex(alpha, 0.0);
    CHECK(frobenius_distance(displacement(alpha, d), expm_antihermitian(g)) <= 1e-11);
  }
}

TEST_CASE("snap") {
  const std::vector<double> zeros(4, 0.0);
  CHECK(frobenius_distance(snap(zeros), ComplexMatrix::identity(4)) == 0.0);

  const std::vector<double> half = {0.0, std::numbers::pi};
  const ComplexMatrix sz = snap(half);
  CHECK(std::abs(sz(0, 0) - Complex(1.0, 0.0)) <= 1e-15);
  CHECK(std::abs(sz(1, 1) - Complex(-1.0, 0.0)) <= 1e-15);

  RngStream s(4, 4);
  std::vector<double> th(5), neg(5);
  for (int i = 0; i < 5; ++i) {
    th[i] = s.uniform(0.0, kTwoPi);
    neg[i] = -th[i];
  }
  CHECK(frobenius_distance(matmul(snap(th), snap(neg)), ComplexMatrix::identity(5)) <= 1e-14);
}

TEST_CASE("block closed cases") {
  RngStream s(10, 1);
  BlockParams p;
  p.alpha = s.uniform(0.0, kTwoPi);
  p.thetas.assign(4, 0.0);
  CHECK(frobenius_distance(block(p), ComplexMatrix::identity(4)) <= 1e-9);

  BlockParams q = random_block(3, s);
  q.alpha = 0.0;
  CHECK(frobenius_distance(block(q), snap(q.thetas)) <= 1e-14);
}

TEST_CASE("block spectrum is the SNAP spectrum") {
  // unitary conjugation preserves tr(B^k); compare against sum of e^{ik theta}
  RngStream s(12, 3);
  for (int d : {2, 4, 6}) {
    const BlockParams p = random_block(d, s);
    const ComplexMatrix b = block(p);
    ComplexMatrix power = ComplexMatrix::identity(d);
    for (int k = 1; k <= d; ++k) {
      power = matmul(power, b);
      Complex want = 0.0;
      for (int n = 0; n < d; ++n) want += std::polar(1.0, k * p.thetas[n]);
      CHECK(std::abs(trace(power) - want) <= 1e-8);
    }
  }
}

TEST_CASE("ansatz composition") {
  RngStream s(13, 0);
  const AnsatzParams one = random_ansatz(3, 1, s);
  CHECK(frobenius_distance(ansatz(one), block(one.blocks[0])) == 0.0);

  AnsatzParams idp;
  for (int i = 0; i < 4; ++i) {
    BlockParams b;
    b.alpha = s.uniform(0.0, kTwoPi);
    b.thetas.assign(3, 0.0);
    idp.blocks.push_back(b);
  }
  CHECK(frobenius_distance(ansatz(idp), ComplexMatrix::identity(3)) <= 4e-9);

  const AnsatzParams two = random_ansatz(4, 2, s);
  CHECK(frobenius_distance(ansatz(two), matmul(block(two.blocks[1]), block(two.blocks[0]))) == 0.0);
}

TEST_CASE("partition_block") {
  RngStream s(14, 0);
  const int d = 4;
  const BlockParams p = random_block(d, s);

  const BlockPartition last = partition_block(p, d - 1);
  const ComplexMatrix d_alpha = displacement(p.alpha, d);
  CHECK(frobenius_distance(last.w_a, matmul(adjoint(d_alpha), snap(p.thetas))) <= 1e-12);
  CHECK(frobenius_distance(last.w_b, d_alpha) <= 1e-12);

  BlockParams q = p;
  q.alpha = 0.0;
  const BlockPartition first = partition_block(q, 0);
  CHECK(std::abs(first.w_a(0, 0) - std::polar(1.0, q.thetas[0])) <= 1e-14);
  CHECK(std::abs(first.w_a(1, 1) - Complex(1.0, 0.0)) <= 1e-14);
  CHECK(std::abs(first.w_b(0, 0) - Complex(1.0, 0.0)) <= 1e-14);
  CHECK(std::abs(first.w_b(1, 1) - std::polar(1.0, q.thetas[1])) <= 1e-14);

  for (int nu = 0; nu < d; ++nu) {
    const BlockPartition part = partition_block(p, nu);
    CHECK(is_unitary(part.w_a, 1e-10));
    CHECK(is_unitary(part.w_b, 1e-10));
    CHECK(frobenius_distance(matmul(part.w_a, part.w_b), block(p)) <= 1e-9);
  }
  CHECK_THROWS_AS(partition_block(p, d), std::out_of_range);
  CHECK_THROWS_AS(partition_block(p, -1), std::out_of_range);
}

TEST_CASE("split_ansatz") {
  RngStream s(15, 0);
  const AnsatzParams one = random_ansatz(3, 1, s);
  const SplitAnsatz s1 = split_ansatz(one, 1);
  CHECK(frobenius_distance(s1.u_l, ComplexMatrix::identity(3)) == 0.0);
  CHECK(frobenius_distance(s1.u_r, ComplexMatrix::identity(3)) == 0.0);

  const AnsatzParams four = random_ansatz(4, 4, s);
  const SplitAnsatz stop = split_ansatz(four, 4);
  CHECK(frobenius_distance(stop.u_r, ComplexMatrix::identity(4)) == 0.0);

  for (int k = 1; k <= 4; ++k) {
    const SplitAnsatz sp = split_ansatz(four, k);
    CHECK(frobenius_distance(matmul(sp.u_r, matmul(block(sp.b), sp.u_l)), ansatz(four)) <= 1e-9);
  }
  CHECK_THROWS_AS(split_ansatz(four, 0), std::out_of_range);
  CHECK_THROWS_AS(split_ansatz(four, 5), std::out_of_range);
}

TEST_CASE("block_gradient closed case and norm") {
  BlockParams p;
  p.alpha = 0.0;
  p.thetas.assign(2, 0.0);
  const ComplexMatrix g = block_gradient(p, 0);
  CHECK(std::abs(g(0, 0) - Complex(0.0, 1.0)) <= 1e-14);
  CHECK(std::abs(g(1, 1)) <= 1e-14);

  RngStream s(16, 0);
  for (int d : {2, 5, 9}) {
    const BlockParams q = random_block(d, s);
    const int nu = static_cast<int>(s.next_u64() % d);
    CHECK(frobenius_norm(block_gradient(q, nu)) == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("block_gradient matches finite differences entrywise") {
  RngStream s(17, 0);
  const double h = 1e-5;
  int checked = 0;
  for (int rep = 0; rep < 50; ++rep) {
    const int d = 2 + static_cast<int>(s.next_u64() % 7);  // up to 8
    const BlockParams p = random_block(d, s);
    const int nu = static_cast<int>(s.next_u64() % d);

    BlockParams plus = p, minus = p;
    plus.thetas[nu] += h;
    minus.thetas[nu] -= h;
    const ComplexMatrix bp = block(plus), bm = block(minus);
    const ComplexMatrix g = block_gradient(p, nu);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const Complex fd = (bp(i, j) - bm(i, j)) / (2.0 * h);
        CHECK(std::abs(fd - g(i, j)) <= 1e-8);
      }
    ++checked;
  }
  CHECK(checked == 50);
}

TEST_CASE("every gate-producing operation yields a unitary") {
  RngStream s(18, 0);
  for (int d = 2; d <= 12; ++d) {
    for (int rep = 0; rep < 20; ++rep) {
      const BlockParams p = random_block(d, s);
      CHECK(is_unitary(displacement(p.alpha, d), 1e-10));
      CHECK(is_unitary(snap(p.thetas), 1e-10));
      CHECK(is_unitary(block(p), 1e-10));
    }
    const AnsatzParams a = random_ansatz(d, 4, s);
    CHECK(is_unitary(ansatz(a), 4e-9));
  }
}

}  // TEST_SUITE
