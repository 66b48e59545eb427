#include "snapvar/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace snapvar {

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> entries) {
  ComplexMatrix m(static_cast<int>(entries.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = entries[i];
  return m;
}

ComplexMatrix ComplexMatrix::basis_projector(int dim, int index) {
  if (index < 0 || index >= dim) throw std::out_of_range("basis_projector: index out of range");
  ComplexMatrix m(dim);
  m(index, index) = 1.0;
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("matrix addition: dimension mismatch");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("matrix subtraction: dimension mismatch");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& x : data_) x *= s;
  return *this;
}

bool ComplexMatrix::has_nonfinite() const {
  for (const auto& x : data_)
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return true;
  return false;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matmul: dimension mismatch");
  const int d = a.dim();
  ComplexMatrix c(d);
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (int j = 0; j < d; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  const int d = a.dim();
  ComplexMatrix c(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) c(i, j) = std::conj(a(j, i));
  return c;
}

Complex trace(const ComplexMatrix& a) {
  Complex t = 0.0;
  for (int i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("frobenius_distance: dimension mismatch");
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) s += std::norm(a(i, j) - b(i, j));
  return std::sqrt(s);
}

bool is_unitary(const ComplexMatrix& a, double t) {
  return frobenius_distance(matmul(adjoint(a), a), ComplexMatrix::identity(a.dim())) <= t;
}

bool is_hermitian(const ComplexMatrix& a, double t) {
  return frobenius_distance(a, adjoint(a)) <= t;
}

bool is_diagonal(const ComplexMatrix& a, double t) {
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s) <= t;
}

namespace {

double offdiag_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace

EigResult hermitian_eig(const ComplexMatrix& h, double hermitian_tol) {
  const int d = h.dim();
  if (d < 1) throw std::invalid_argument("hermitian_eig: empty matrix");
  if (!is_hermitian(h, hermitian_tol)) throw std::invalid_argument("hermitian_eig: input is not Hermitian");

  // Work on the Hermitian average so roundoff in the input cannot push the
  // iteration off the Hermitian manifold.
  ComplexMatrix a(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
  ComplexMatrix v = ComplexMatrix::identity(d);

  const double stop = tol::jacobi_offdiag * std::max(frobenius_norm(a), 1e-300);
  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps && offdiag_norm(a) > stop; ++sweep) {
    for (int p = 0; p < d - 1; ++p) {
      for (int q = p + 1; q < d; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        // Phase factor turning the 2x2 pivot block real-symmetric, then a
        // real Jacobi rotation annihilating it.
        const Complex phase = apq / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        double c = 1.0, s = 0.0;
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        c = 1.0 / std::sqrt(1.0 + t * t);
        s = t * c;
        const Complex sp = s * phase;          // rotation column p mixes in e^{i phi}
        // A <- J^+ A J with J[p][p]=c, J[p][q]=sp', ... applied as column then
        // row updates; Hermiticity is restored explicitly on the pivot.
        for (int i = 0; i < d; ++i) {
          const Complex aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip - std::conj(sp) * aiq;
          a(i, q) = sp * aip + c * aiq;
        }
        for (int j = 0; j < d; ++j) {
          const Complex apj = a(p, j), aqj = a(q, j);
          a(p, j) = c * apj - sp * aqj;
          a(q, j) = std::conj(sp) * apj + c * aqj;
        }
        a(p, q) = std::conj(a(q, p));
        a(p, p) = Complex(a(p, p).real(), 0.0);
        a(q, q) = Complex(a(q, q).real(), 0.0);
        for (int i = 0; i < d; ++i) {
          const Complex vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip - std::conj(sp) * viq;
          v(i, q) = sp * vip + c * viq;
        }
      }
    }
  }

  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EigResult r;
  r.eigenvalues.resize(d);
  r.eigenvectors = ComplexMatrix(d);
  for (int j = 0; j < d; ++j) {
    r.eigenvalues[j] = a(order[j], order[j]).real();
    for (int i = 0; i < d; ++i) r.eigenvectors(i, j) = v(i, order[j]);
  }
  return r;
}

ComplexMatrix expm_antihermitian(const ComplexMatrix& g, double anti_hermitian_tol) {
  const int d = g.dim();
  const double scale = std::max(1.0, frobenius_norm(g));
  if (frobenius_distance(g, Complex(-1.0, 0.0) * adjoint(g)) > anti_hermitian_tol * scale)
    throw std::invalid_argument("expm_antihermitian: input is not anti-Hermitian");

  // g = i*h with h Hermitian; exp(g) = V diag(e^{i lambda}) V^+.
  ComplexMatrix h(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) h(i, j) = Complex(0.0, -1.0) * g(i, j);
  EigResult e = hermitian_eig(h, anti_hermitian_tol * scale);

  ComplexMatrix out(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Complex s = 0.0;
      for (int k = 0; k < d; ++k) {
        const Complex ph = std::polar(1.0, e.eigenvalues[k]);
        s += e.eigenvectors(i, k) * ph * std::conj(e.eigenvectors(j, k));
      }
      out(i, j) = s;
    }
  }
  return out;
}

}  // namespace snapvar
