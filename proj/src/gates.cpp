#include "snapvar/gates.hpp"

#include <cmath>
#include <array>
#include <atomic>
#include <mutex>
#include <stdexcept>

namespace snapvar {

ComplexMatrix lowering(int d) {
  if (d < 1) throw std::invalid_argument("lowering: dimension must be >= 1");
  ComplexMatrix a(d);
  for (int n = 1; n < d; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

ComplexMatrix raising(int d) { return adjoint(lowering(d)); }

namespace {

// Spectral basis of the fixed generator h = -i(a - a^+), cached per
// dimension: D(alpha) = V diag(e^{i alpha lambda}) V^+.
struct DisplacementBasis {
  std::vector<double> eigenvalues;
  ComplexMatrix vectors;
};

DisplacementBasis make_displacement_basis(int d) {
  ComplexMatrix g = lowering(d);
  g -= raising(d);
  ComplexMatrix h(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) h(i, j) = Complex(0.0, -1.0) * g(i, j);
  EigResult e = hermitian_eig(h);
  return {std::move(e.eigenvalues), std::move(e.eigenvectors)};
}

constexpr int kMaxCachedDim = 64;

// Lock-free on the hot path; the mutex only guards first construction.
// Entries live for the process lifetime.
const DisplacementBasis& displacement_basis(int d) {
  static std::array<std::atomic<const DisplacementBasis*>, kMaxCachedDim + 1> cache{};
  static std::mutex build_mutex;
  const DisplacementBasis* hit = cache[static_cast<size_t>(d)].load(std::memory_order_acquire);
  if (hit) return *hit;
  std::lock_guard<std::mutex> lock(build_mutex);
  hit = cache[static_cast<size_t>(d)].load(std::memory_order_acquire);
  if (hit) return *hit;
  const auto* built = new DisplacementBasis(make_displacement_basis(d));
  cache[static_cast<size_t>(d)].store(built, std::memory_order_release);
  return *built;
}

ComplexMatrix displacement_from_basis(const DisplacementBasis& b, double alpha, int d) {
  ComplexMatrix out(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Complex s = 0.0;
      for (int k = 0; k < d; ++k)
        s += b.vectors(i, k) * std::polar(1.0, alpha * b.eigenvalues[k]) * std::conj(b.vectors(j, k));
      out(i, j) = s;
    }
  }
  return out;
}

}  // namespace

ComplexMatrix displacement(double alpha, int d) {
  if (d < 1) throw std::invalid_argument("displacement: dimension must be >= 1");
  if (!std::isfinite(alpha)) throw std::invalid_argument("displacement: alpha must be finite");
  if (alpha == 0.0) return ComplexMatrix::identity(d);
  if (d > kMaxCachedDim) return displacement_from_basis(make_displacement_basis(d), alpha, d);
  return displacement_from_basis(displacement_basis(d), alpha, d);
}

ComplexMatrix snap(std::span<const double> thetas) {
  const int d = static_cast<int>(thetas.size());
  ComplexMatrix s(d);
  for (int n = 0; n < d; ++n) s(n, n) = std::polar(1.0, thetas[n]);
  return s;
}

ComplexMatrix block(const BlockParams& p) {
  const ComplexMatrix d_alpha = displacement(p.alpha, p.dim());
  return matmul(adjoint(d_alpha), matmul(snap(p.thetas), d_alpha));
}

ComplexMatrix ansatz(const AnsatzParams& p) {
  if (p.blocks.empty()) throw std::invalid_argument("ansatz: needs at least one block");
  ComplexMatrix u = block(p.blocks.front());
  for (size_t i = 1; i < p.blocks.size(); ++i) u = matmul(block(p.blocks[i]), u);
  return u;
}

BlockPartition partition_block(const BlockParams& p, int nu) {
  const int d = p.dim();
  if (nu < 0 || nu >= d) throw std::out_of_range("partition_block: nu out of range");
  const ComplexMatrix d_alpha = displacement(p.alpha, d);

  ComplexMatrix lo = ComplexMatrix::identity(d);
  for (int j = 0; j <= nu; ++j) lo(j, j) = std::polar(1.0, p.thetas[j]);
  ComplexMatrix hi = ComplexMatrix::identity(d);
  for (int j = nu + 1; j < d; ++j) hi(j, j) = std::polar(1.0, p.thetas[j]);

  BlockPartition out;
  out.nu = nu;
  out.w_a = matmul(adjoint(d_alpha), lo);
  out.w_b = matmul(hi, d_alpha);
  return out;
}

SplitAnsatz split_ansatz(const AnsatzParams& p, int k) {
  const int t = p.num_blocks();
  if (k < 1 || k > t) throw std::out_of_range("split_ansatz: block index out of range");
  const int d = p.dim();

  SplitAnsatz out;
  out.u_l = ComplexMatrix::identity(d);
  for (int i = 0; i < k - 1; ++i) out.u_l = matmul(block(p.blocks[i]), out.u_l);
  out.b = p.blocks[k - 1];
  out.u_r = ComplexMatrix::identity(d);
  for (int i = k; i < t; ++i) out.u_r = matmul(block(p.blocks[i]), out.u_r);
  return out;
}

ComplexMatrix block_gradient(const BlockParams& p, int nu) {
  const BlockPartition part = partition_block(p, nu);
  const int d = p.dim();
  // i * w_a |nu><nu| w_b is the outer product of w_a's column nu with
  // w_b's row nu.
  ComplexMatrix g(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      g(i, j) = Complex(0.0, 1.0) * part.w_a(i, nu) * part.w_b(nu, j);
  return g;
}

}  // namespace snapvar
