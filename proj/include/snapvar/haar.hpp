#pragma once

#include <cstdint>
#include <functional>

#include "snapvar/linalg.hpp"
#include "snapvar/rng.hpp"

namespace snapvar {

/// Haar-distributed unitary: complex Ginibre matrix orthonormalized by
/// modified Gram-Schmidt. MGS makes the triangular factor's diagonal
/// positive real by construction, which is exactly the gauge fixing the
/// Haar measure needs.
ComplexMatrix haar_unitary(int d, RngStream& stream);

/// E[w_{i1,j1} conj(w_{i2,j2})] over Haar: delta_{i1,i2} delta_{j1,j2} / d.
Complex haar_first_moment(int i1, int j1, int i2, int j2, int d);

/// Index tuple for the degree-(2,2) element moment.
struct MomentQuery {
  int i1, j1, i2, j2;  // unconjugated entries w_{i1,j1} w_{i2,j2}
  int p1, k1, p2, k2;  // conjugated entries conj(w_{p1,k1}) conj(w_{p2,k2})
  int d;
};

/// E[w_{i1,j1} w_{i2,j2} conj(w_{p1,k1}) conj(w_{p2,k2})] over Haar
/// (two-term Weingarten formula; requires d >= 2).
Complex haar_second_moment(const MomentQuery& q);

// Closed forms of the Haar trace integrals. W is integrated over U(d);
// the operator arguments are arbitrary (equal-dimension) matrices.
Complex haar_trace_pair(const ComplexMatrix& c, const ComplexMatrix& d);          // E tr[WC] tr[W+D]
Complex haar_trace_quad(const ComplexMatrix& c, const ComplexMatrix& d,
                        const ComplexMatrix& e, const ComplexMatrix& f);          // E tr[WC]tr[W+D]tr[WE]tr[W+F]
Complex haar_conjugation(const ComplexMatrix& a, const ComplexMatrix& b);         // E tr[WAW+B]
Complex haar_conjugation_quad(const ComplexMatrix& a, const ComplexMatrix& b,
                              const ComplexMatrix& c, const ComplexMatrix& d);    // E tr[WAW+BWCW+D]
Complex haar_conjugation_pair(const ComplexMatrix& a, const ComplexMatrix& b,
                              const ComplexMatrix& c, const ComplexMatrix& d);    // E tr[WAW+B] tr[WCW+D]
Complex haar_conjugation_squared(const ComplexMatrix& a, const ComplexMatrix& b); // E (tr[WAW+B])^2

// Independent oracles: the same integrals evaluated by exhaustive index
// summation over element moments. Exponential in d (guarded at d <= 6);
// exact up to floating-point accumulation.
inline constexpr int kMaxSumOracleDim = 6;
Complex weingarten_sum_trace_pair(const ComplexMatrix& c, const ComplexMatrix& d);
Complex weingarten_sum_conjugation(const ComplexMatrix& a, const ComplexMatrix& b);
Complex weingarten_sum_trace_quad(const ComplexMatrix& c, const ComplexMatrix& d,
                                  const ComplexMatrix& e, const ComplexMatrix& f);
Complex weingarten_sum_conjugation_quad(const ComplexMatrix& a, const ComplexMatrix& b,
                                        const ComplexMatrix& c, const ComplexMatrix& d);
Complex weingarten_sum_conjugation_pair(const ComplexMatrix& a, const ComplexMatrix& b,
                                        const ComplexMatrix& c, const ComplexMatrix& d);

struct FramePotentialEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t n_pairs = 0;
};

using EnsembleSampler = std::function<ComplexMatrix(RngStream&)>;

/// Monte Carlo estimate of E |tr(U^+ V)|^{2t} over independent ensemble
/// pairs. The Haar reference is obtained by running this same estimator on
/// haar_unitary, never from a hard-coded constant.
FramePotentialEstimate frame_potential(const EnsembleSampler& sampler, int t, std::uint64_t n_pairs,
                                       SeededRng rng, std::uint64_t stream_base = 0);

}  // namespace snapvar
