#ifndef MINHERM_MATRIX_HPP
#define MINHERM_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "minherm/errors.hpp"

namespace minherm {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;
using RealVector = std::vector<double>;
using DiagonalVector = std::vector<double>;

/// Relative tolerance for the Hermitian-symmetry check. Inputs may come from
/// text files with decimal rounding, so exact equality is not required.
inline constexpr double kHermitianTol = 1e-12;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  ComplexMatrix(std::size_t n, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t dim() const { return n_; }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  const std::vector<Complex>& entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;
  double frobenius_norm() const;
  double max_abs() const;

  ComplexVector column(std::size_t j) const;
  ComplexVector apply(const ComplexVector& x) const;  // matrix * vector

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  bool same_entries(const ComplexMatrix& other) const;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> entries_;
};

/// Dense square real matrix, row-major. Used for the orthogonal matrices of
/// the zero-diagonal construction and for doubly stochastic images.
class RealMatrix {
 public:
  RealMatrix() = default;
  explicit RealMatrix(std::size_t n) : n_(n), entries_(n * n, 0.0) {}

  static RealMatrix identity(std::size_t n);

  std::size_t dim() const { return n_; }

  double& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  RealMatrix transpose() const;
  double frobenius_norm() const;
  RealVector column(std::size_t j) const;
  ComplexMatrix to_complex() const;

  friend RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);

 private:
  std::size_t n_ = 0;
  std::vector<double> entries_;
};

/// Hermitian matrix: a ComplexMatrix whose symmetry defect has been checked
/// (or that is Hermitian by construction). Immutable after construction.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;

  std::size_t dim() const { return mat_.dim(); }
  const ComplexMatrix& matrix() const { return mat_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return mat_(i, j); }

  /// Real diagonal (imaginary parts are below the validation tolerance).
  RealVector diagonal() const;
  double trace_real() const;
  double frobenius_norm() const { return mat_.frobenius_norm(); }

  /// Exact Hermitian projection (A + A*)/2 of an arbitrary square matrix.
  /// Used for matrices that are Hermitian by construction up to roundoff.
  static HermitianMatrix symmetrized(const ComplexMatrix& a);

  friend HermitianMatrix hermitian_from_entries(const ComplexMatrix& raw, double tol);

 private:
  explicit HermitianMatrix(ComplexMatrix m) : mat_(std::move(m)) {}
  ComplexMatrix mat_;
};

/// Validates the Hermitian-symmetry invariant and wraps the entries as given
/// (no symmetrization, so file round trips stay bit-identical).
/// Throws NotHermitian naming the worst offending pair, or DimensionMismatch.
HermitianMatrix hermitian_from_entries(const ComplexMatrix& raw, double tol = kHermitianTol);

/// Entrywise squared moduli (|v_1|^2, ..., |v_n|^2). Sums to ||v||^2.
RealVector abs_profile(const ComplexVector& v);

/// Rank-one positive map x -> <x, v> v; entry (i,j) is v_i * conj(v_j).
HermitianMatrix outer(const ComplexVector& v);

/// Entrywise (Schur/Hadamard) product. Throws DimensionMismatch.
ComplexMatrix schur_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Adds a real diagonal; off-diagonal entries are unchanged bit-for-bit.
HermitianMatrix add_diagonal(const HermitianMatrix& m, const DiagonalVector& d);

// Small vector helpers shared across modules.
double norm(const ComplexVector& v);
Complex inner(const ComplexVector& a, const ComplexVector& b);  // <a, b> = sum a_i conj(b_i)
ComplexVector scaled(const ComplexVector& v, Complex s);

}  // namespace minherm

#endif  // MINHERM_MATRIX_HPP
