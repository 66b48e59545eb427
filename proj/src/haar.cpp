#include "snapvar/haar.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "snapvar/mc.hpp"

namespace snapvar {

ComplexMatrix haar_unitary(int d, RngStream& stream) {
  if (d < 1) throw std::invalid_argument("haar_unitary: dimension must be >= 1");
  ComplexMatrix z(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) z(i, j) = stream.complex_normal();

  // Modified Gram-Schmidt over columns, one reorthogonalization pass to hold
  // unitarity near machine precision at larger d.
  for (int j = 0; j < d; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 0; i < j; ++i) {
        Complex proj = 0.0;
        for (int r = 0; r < d; ++r) proj += std::conj(z(r, i)) * z(r, j);
        for (int r = 0; r < d; ++r) z(r, j) -= proj * z(r, i);
      }
    }
    double norm = 0.0;
    for (int r = 0; r < d; ++r) norm += std::norm(z(r, j));
    norm = std::sqrt(norm);
    for (int r = 0; r < d; ++r) z(r, j) /= norm;
  }
  return z;
}

namespace {

inline double kron(int a, int b) { return a == b ? 1.0 : 0.0; }

void check_range(int idx, int d, const char* what) {
  if (idx < 0 || idx >= d) throw std::out_of_range(std::string(what) + ": index out of range");
}

void check_dims_equal(int a, int b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

}  // namespace

Complex haar_first_moment(int i1, int j1, int i2, int j2, int d) {
  check_range(i1, d, "haar_first_moment");
  check_range(j1, d, "haar_first_moment");
  check_range(i2, d, "haar_first_moment");
  check_range(j2, d, "haar_first_moment");
  return Complex(kron(i1, i2) * kron(j1, j2) / d, 0.0);
}

Complex haar_second_moment(const MomentQuery& q) {
  const int d = q.d;
  if (d < 2) throw std::domain_error("haar_second_moment: requires d >= 2");
  for (int idx : {q.i1, q.j1, q.i2, q.j2, q.p1, q.k1, q.p2, q.k2}) check_range(idx, d, "haar_second_moment");
  const double dd = d;
  const double direct = kron(q.i1, q.p1) * kron(q.i2, q.p2) * kron(q.j1, q.k1) * kron(q.j2, q.k2) +
                        kron(q.i1, q.p2) * kron(q.i2, q.p1) * kron(q.j1, q.k2) * kron(q.j2, q.k1);
  const double crossed = kron(q.i1, q.p1) * kron(q.i2, q.p2) * kron(q.j1, q.k2) * kron(q.j2, q.k1) +
                         kron(q.i1, q.p2) * kron(q.i2, q.p1) * kron(q.j1, q.k1) * kron(q.j2, q.k2);
  return Complex(direct / (dd * dd - 1.0) - crossed / (dd * (dd * dd - 1.0)), 0.0);
}

Complex haar_trace_pair(const ComplexMatrix& c, const ComplexMatrix& d) {
  check_dims_equal(c.dim(), d.dim(), "haar_trace_pair");
  return trace(matmul(c, d)) / static_cast<double>(c.dim());
}

Complex haar_trace_quad(const ComplexMatrix& c, const ComplexMatrix& d, const ComplexMatrix& e,
                        const ComplexMatrix& f) {
  check_dims_equal(c.dim(), d.dim(), "haar_trace_quad");
  check_dims_equal(c.dim(), e.dim(), "haar_trace_quad");
  check_dims_equal(c.dim(), f.dim(), "haar_trace_quad");
  const double n = c.dim();
  if (n < 2) throw std::domain_error("haar_trace_quad: requires d >= 2");
  const Complex cd = trace(matmul(c, d)), ef = trace(matmul(e, f));
  const Complex cf = trace(matmul(c, f)), ed = trace(matmul(e, d));
  const Complex cdef = trace(matmul(matmul(c, d), matmul(e, f)));
  const Complex cfed = trace(matmul(matmul(c, f), matmul(e, d)));
  return (cd * ef + cf * ed) / (n * n - 1.0) - (cdef + cfed) / (n * (n * n - 1.0));
}

Complex haar_conjugation(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_dims_equal(a.dim(), b.dim(), "haar_conjugation");
  return trace(a) * trace(b) / static_cast<double>(a.dim());
}

Complex haar_conjugation_quad(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                              const ComplexMatrix& d) {
  check_dims_equal(a.dim(), b.dim(), "haar_conjugation_quad");
  check_dims_equal(a.dim(), c.dim(), "haar_conjugation_quad");
  check_dims_equal(a.dim(), d.dim(), "haar_conjugation_quad");
  const double n = a.dim();
  if (n < 2) throw std::domain_error("haar_conjugation_quad: requires d >= 2");
  const Complex ta = trace(a), tb = trace(b), tc = trace(c), td = trace(d);
  const Complex ac = trace(matmul(a, c)), bd = trace(matmul(b, d));
  return (ta * tc * bd + ac * tb * td) / (n * n - 1.0) -
         (ac * bd + ta * tb * tc * td) / (n * (n * n - 1.0));
}

Complex haar_conjugation_pair(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                              const ComplexMatrix& d) {
  check_dims_equal(a.dim(), b.dim(), "haar_conjugation_pair");
  check_dims_equal(a.dim(), c.dim(), "haar_conjugation_pair");
  check_dims_equal(a.dim(), d.dim(), "haar_conjugation_pair");
  const double n = a.dim();
  if (n < 2) throw std::domain_error("haar_conjugation_pair: requires d >= 2");
  const Complex ta = trace(a), tb = trace(b), tc = trace(c), td = trace(d);
  const Complex ac = trace(matmul(a, c)), bd = trace(matmul(b, d));
  return (ta * tb * tc * td + ac * bd) / (n * n - 1.0) -
         (ac * tb * td + ta * tc * bd) / (n * (n * n - 1.0));
}

Complex haar_conjugation_squared(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_dims_equal(a.dim(), b.dim(), "haar_conjugation_squared");
  const double n = a.dim();
  if (n < 2) throw std::domain_error("haar_conjugation_squared: requires d >= 2");
  const Complex ta = trace(a), tb = trace(b);
  const Complex a2 = trace(matmul(a, a)), b2 = trace(matmul(b, b));
  return (ta * ta * (tb * tb - b2 / n) + a2 * (b2 - tb * tb / n)) / (n * n - 1.0);
}

namespace {

void check_oracle_dim(int d, const char* what) {
  if (d > kMaxSumOracleDim)
    throw std::invalid_argument(std::string(what) + ": exhaustive summation is limited to d <= 6");
  if (d < 2) throw std::domain_error(std::string(what) + ": requires d >= 2");
}

}  // namespace

Complex weingarten_sum_trace_pair(const ComplexMatrix& c, const ComplexMatrix& d) {
  check_dims_equal(c.dim(), d.dim(), "weingarten_sum_trace_pair");
  const int n = c.dim();
  if (n > kMaxSumOracleDim) throw std::invalid_argument("weingarten_sum_trace_pair: d too large");
  // tr[WC] tr[W+D] = sum c_{ji} d_{mk} w_{ij} conj(w_{mk})
  Complex total = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < n; ++m)
        for (int k = 0; k < n; ++k)
          total += c(j, i) * d(m, k) * haar_first_moment(i, j, m, k, n);
  return total;
}

Complex weingarten_sum_conjugation(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_dims_equal(a.dim(), b.dim(), "weingarten_sum_conjugation");
  const int n = a.dim();
  if (n > kMaxSumOracleDim) throw std::invalid_argument("weingarten_sum_conjugation: d too large");
  // tr[W A W+ B] = sum a_{j1 j2} b_{i2 i1} E[w_{i1 j1} conj(w_{i2 j2})]
  Complex total = 0.0;
  for (int i1 = 0; i1 < n; ++i1)
    for (int j1 = 0; j1 < n; ++j1)
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < n; ++j2)
          total += a(j1, j2) * b(i2, i1) * haar_first_moment(i1, j1, i2, j2, n);
  return total;
}

Complex weingarten_sum_trace_quad(const ComplexMatrix& c, const ComplexMatrix& d,
                                  const ComplexMatrix& e, const ComplexMatrix& f) {
  check_dims_equal(c.dim(), d.dim(), "weingarten_sum_trace_quad");
  check_dims_equal(c.dim(), e.dim(), "weingarten_sum_trace_quad");
  check_dims_equal(c.dim(), f.dim(), "weingarten_sum_trace_quad");
  const int n = c.dim();
  check_oracle_dim(n, "weingarten_sum_trace_quad");
  // sum c_{ji} d_{mk} e_{j'i'} f_{m'k'} E[w_{ij} w_{i'j'} conj(w_{mk}) conj(w_{m'k'})]
  Complex total = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < n; ++m)
        for (int k = 0; k < n; ++k)
          for (int i2 = 0; i2 < n; ++i2)
            for (int j2 = 0; j2 < n; ++j2)
              for (int m2 = 0; m2 < n; ++m2)
                for (int k2 = 0; k2 < n; ++k2) {
                  const Complex mom = haar_second_moment({i, j, i2, j2, m, k, m2, k2, n});
                  if (mom == Complex{}) continue;
                  total += c(j, i) * d(m, k) * e(j2, i2) * f(m2, k2) * mom;
                }
  return total;
}

Complex weingarten_sum_conjugation_quad(const ComplexMatrix& a, const ComplexMatrix& b,
                                        const ComplexMatrix& c, const ComplexMatrix& d) {
  check_dims_equal(a.dim(), b.dim(), "weingarten_sum_conjugation_quad");
  check_dims_equal(a.dim(), c.dim(), "weingarten_sum_conjugation_quad");
  check_dims_equal(a.dim(), d.dim(), "weingarten_sum_conjugation_quad");
  const int n = a.dim();
  check_oracle_dim(n, "weingarten_sum_conjugation_quad");
  // tr[W A W+ B W C W+ D] =
  //   sum a_{j1 j2} b_{i2 i3} c_{j3 j4} d_{i4 i1}
  //       E[w_{i1 j1} w_{i3 j3} conj(w_{i2 j2}) conj(w_{i4 j4})]
  Complex total = 0.0;
  for (int i1 = 0; i1 < n; ++i1)
    for (int j1 = 0; j1 < n; ++j1)
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < n; ++j2)
          for (int i3 = 0; i3 < n; ++i3)
            for (int j3 = 0; j3 < n; ++j3)
              for (int i4 = 0; i4 < n; ++i4)
                for (int j4 = 0; j4 < n; ++j4) {
                  const Complex mom = haar_second_moment({i1, j1, i3, j3, i2, j2, i4, j4, n});
                  if (mom == Complex{}) continue;
                  total += a(j1, j2) * b(i2, i3) * c(j3, j4) * d(i4, i1) * mom;
                }
  return total;
}

Complex weingarten_sum_conjugation_pair(const ComplexMatrix& a, const ComplexMatrix& b,
                                        const ComplexMatrix& c, const ComplexMatrix& d) {
  check_dims_equal(a.dim(), b.dim(), "weingarten_sum_conjugation_pair");
  check_dims_equal(a.dim(), c.dim(), "weingarten_sum_conjugation_pair");
  check_dims_equal(a.dim(), d.dim(), "weingarten_sum_conjugation_pair");
  const int n = a.dim();
  check_oracle_dim(n, "weingarten_sum_conjugation_pair");
  // tr[W A W+ B] tr[W C W+ D] =
  //   sum a_{j1 j2} b_{i2 i1} c_{j3 j4} d_{i4 i3}
  //       E[w_{i1 j1} w_{i3 j3} conj(w_{i2 j2}) conj(w_{i4 j4})]
  Complex total = 0.0;
  for (int i1 = 0; i1 < n; ++i1)
    for (int j1 = 0; j1 < n; ++j1)
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < n; ++j2)
          for (int i3 = 0; i3 < n; ++i3)
            for (int j3 = 0; j3 < n; ++j3)
              for (int i4 = 0; i4 < n; ++i4)
                for (int j4 = 0; j4 < n; ++j4) {
                  const Complex mom = haar_second_moment({i1, j1, i3, j3, i2, j2, i4, j4, n});
                  if (mom == Complex{}) continue;
                  total += a(j1, j2) * b(i2, i1) * c(j3, j4) * d(i4, i3) * mom;
                }
  return total;
}

FramePotentialEstimate frame_potential(const EnsembleSampler& sampler, int t, std::uint64_t n_pairs,
                                       SeededRng rng, std::uint64_t stream_base) {
  if (t != 1 && t != 2) throw std::invalid_argument("frame_potential: t must be 1 or 2");
  if (n_pairs < 1000) throw std::invalid_argument("frame_potential: needs at least 1000 pairs");

  const MomentAccumulator acc =
      accumulate_parallel(n_pairs, [&](std::uint64_t i) -> double {
        RngStream stream = rng.substream(stream_base + i);
        const ComplexMatrix u = sampler(stream);
        const ComplexMatrix v = sampler(stream);
        const double overlap = std::norm(trace(matmul(adjoint(u), v)));
        return t == 1 ? overlap : overlap * overlap;
      });

  FramePotentialEstimate est;
  est.value = acc.mean;
  est.std_error = acc.stderr_mean();
  est.n_pairs = n_pairs;
  return est;
}

}  // namespace snapvar
