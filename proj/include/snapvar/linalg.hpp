#pragma once

#include <complex>
#include <span>
#include <vector>

namespace snapvar {

using Complex = std::complex<double>;

/// Default numeric tolerances. Contract checks take these as defaulted
/// arguments, so callers can tighten or relax them per call site.
namespace tol {
inline constexpr double unitary = 1e-10;
inline constexpr double hermitian = 1e-10;
inline constexpr double diagonal = 1e-10;
inline constexpr double anti_hermitian = 1e-10;
inline constexpr double imag_residue = 1e-10;
// Jacobi sweeps stop once the off-diagonal Frobenius norm drops below
// this fraction of the total norm.
inline constexpr double jacobi_offdiag = 1e-12;
}  // namespace tol

/// Dense square complex matrix, row-major, the carrier for states, gates
/// and observables throughout the library.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim) : dim_(dim), data_(static_cast<size_t>(dim) * dim) {}

  static ComplexMatrix identity(int dim);
  static ComplexMatrix diagonal(std::span<const Complex> entries);
  /// |index><index| on a dim-dimensional space.
  static ComplexMatrix basis_projector(int dim, int index);

  int dim() const { return dim_; }
  Complex& operator()(int r, int c) { return data_[static_cast<size_t>(r) * dim_ + c]; }
  const Complex& operator()(int r, int c) const { return data_[static_cast<size_t>(r) * dim_ + c]; }
  Complex* data() { return data_.data(); }
  const Complex* data() const { return data_.data(); }

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Complex s);

  bool has_nonfinite() const;

 private:
  int dim_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }

ComplexMatrix adjoint(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// ||a^+ a - I||_F <= t
bool is_unitary(const ComplexMatrix& a, double t = tol::unitary);
bool is_hermitian(const ComplexMatrix& a, double t = tol::hermitian);
bool is_diagonal(const ComplexMatrix& a, double t = tol::diagonal);

struct EigResult {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // columns, unitary
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix. Eigenvalues come
/// back ascending with matching eigenvector columns.
EigResult hermitian_eig(const ComplexMatrix& h, double hermitian_tol = tol::hermitian);

/// exp(g) for anti-Hermitian g, via the spectral decomposition of -i*g.
/// The result is unitary up to eigensolver accuracy; exp(0) == I exactly.
ComplexMatrix expm_antihermitian(const ComplexMatrix& g,
                                 double anti_hermitian_tol = tol::anti_hermitian);

}  // namespace snapvar
