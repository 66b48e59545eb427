#pragma once

#include <span>
#include <vector>

#include "snapvar/linalg.hpp"

namespace snapvar {

/// One ansatz block: displacement amplitude alpha and one SNAP phase per
/// Fock level. Phases are stored exactly as given.
struct BlockParams {
  double alpha = 0.0;
  std::vector<double> thetas;

  int dim() const { return static_cast<int>(thetas.size()); }
};

/// Ordered block sequence; blocks[0] is applied first (rightmost factor).
struct AnsatzParams {
  std::vector<BlockParams> blocks;

  int num_blocks() const { return static_cast<int>(blocks.size()); }
  int dim() const { return blocks.empty() ? 0 : blocks.front().dim(); }
};

/// Factorization B = w_a * w_b around phase index nu, the split every
/// gradient formula is written in.
struct BlockPartition {
  ComplexMatrix w_a;
  ComplexMatrix w_b;
  int nu = 0;
};

struct SplitAnsatz {
  ComplexMatrix u_r;  // blocks k+1..T (empty product = I)
  BlockParams b;      // block k
  ComplexMatrix u_l;  // blocks 1..k-1 (empty product = I)
};

/// Truncated lowering operator: a|n> = sqrt(n)|n-1>.
ComplexMatrix lowering(int d);
/// adjoint(lowering); the image of |d-1> is dropped by the truncation so
/// the displacement generator stays exactly anti-Hermitian.
ComplexMatrix raising(int d);

/// D(alpha) = exp(alpha a - alpha a^+) for real alpha.
ComplexMatrix displacement(double alpha, int d);

/// Diagonal SNAP gate diag(e^{i theta_0}, ..., e^{i theta_{d-1}}).
ComplexMatrix snap(std::span<const double> thetas);

/// B(alpha, theta) = D^+(alpha) S(theta) D(alpha).
ComplexMatrix block(const BlockParams& p);

/// Product with block 1 rightmost.
ComplexMatrix ansatz(const AnsatzParams& p);

/// w_a = D^+ * prod_{j<=nu} e^{i theta_j |j><j|},  w_b = prod_{j>nu} ... * D.
BlockPartition partition_block(const BlockParams& p, int nu);

/// k is 1-based; ansatz == u_r * block(b) * u_l.
SplitAnsatz split_ansatz(const AnsatzParams& p, int k);

/// dB/dtheta_nu = i * w_a |nu><nu| w_b.
ComplexMatrix block_gradient(const BlockParams& p, int nu);

}  // namespace snapvar
