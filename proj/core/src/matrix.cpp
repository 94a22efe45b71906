#include "minherm/matrix.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace minherm {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    std::ostringstream msg;
    msg << op << ": dimension mismatch (" << a << " vs " << b << ")";
    throw DimensionMismatch(msg.str());
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t n, std::vector<Complex> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_) {
    throw DimensionMismatch("ComplexMatrix: entry count does not match dimension");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t n = rows.size();
  ComplexMatrix m(n);
  std::size_t i = 0;
  for (const auto& row : rows) {
    require_same_dim(row.size(), n, "from_rows");
    std::size_t j = 0;
    for (Complex z : row) m(i, j++) = z;
    ++i;
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

ComplexVector ComplexMatrix::column(std::size_t j) const {
  ComplexVector c(n_);
  for (std::size_t i = 0; i < n_; ++i) c[i] = (*this)(i, j);
  return c;
}

ComplexVector ComplexMatrix::apply(const ComplexVector& x) const {
  require_same_dim(x.size(), n_, "apply");
  ComplexVector y(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < n_; ++j) acc += (*this)(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(n_, other.n_, "operator+");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(n_, other.n_, "operator-");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (Complex& z : entries_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "operator*");
  const std::size_t n = a.dim();
  ComplexMatrix r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

bool ComplexMatrix::same_entries(const ComplexMatrix& other) const {
  return n_ == other.n_ && entries_ == other.entries_;
}

RealMatrix RealMatrix::identity(std::size_t n) {
  RealMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

RealMatrix RealMatrix::transpose() const {
  RealMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

double RealMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : entries_) s += x * x;
  return std::sqrt(s);
}

RealVector RealMatrix::column(std::size_t j) const {
  RealVector c(n_);
  for (std::size_t i = 0; i < n_; ++i) c[i] = (*this)(i, j);
  return c;
}

ComplexMatrix RealMatrix::to_complex() const {
  ComplexMatrix m(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "operator*");
  const std::size_t n = a.dim();
  RealMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

RealVector HermitianMatrix::diagonal() const {
  RealVector d(dim());
  for (std::size_t i = 0; i < dim(); ++i) d[i] = mat_(i, i).real();
  return d;
}

double HermitianMatrix::trace_real() const {
  double t = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) t += mat_(i, i).real();
  return t;
}

HermitianMatrix HermitianMatrix::symmetrized(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = Complex(a(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex z = 0.5 * (a(i, j) + std::conj(a(j, i)));
      m(i, j) = z;
      m(j, i) = std::conj(z);
    }
  }
  return HermitianMatrix(std::move(m));
}

HermitianMatrix hermitian_from_entries(const ComplexMatrix& raw, double tol) {
  const std::size_t n = raw.dim();
  const double scale = tol * (1.0 + raw.max_abs());
  double worst = 0.0;
  std::size_t wi = 0, wj = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double defect = std::abs(raw(i, j) - std::conj(raw(j, i)));
      if (defect > worst) {
        worst = defect;
        wi = i;
        wj = j;
      }
    }
  }
  if (worst > scale) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: entry (" << wj + 1 << "," << wi + 1 << ") should be the conjugate of ("
        << wi + 1 << "," << wj + 1 << "), defect " << worst << " exceeds tolerance " << scale;
    throw NotHermitian(msg.str());
  }
  return HermitianMatrix(raw);
}

RealVector abs_profile(const ComplexVector& v) {
  RealVector p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) p[i] = std::norm(v[i]);
  return p;
}

HermitianMatrix outer(const ComplexVector& v) {
  const std::size_t n = v.size();
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i] * std::conj(v[j]);
  return HermitianMatrix::symmetrized(m);
}

ComplexMatrix schur_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "schur_product");
  const std::size_t n = a.dim();
  ComplexMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = a(i, j) * b(i, j);
  return r;
}

HermitianMatrix add_diagonal(const HermitianMatrix& m, const DiagonalVector& d) {
  require_same_dim(m.dim(), d.size(), "add_diagonal");
  ComplexMatrix r = m.matrix();
  for (std::size_t i = 0; i < m.dim(); ++i) r(i, i) += d[i];
  return hermitian_from_entries(r);
}

double norm(const ComplexVector& v) {
  double s = 0.0;
  for (const Complex& z : v) s += std::norm(z);
  return std::sqrt(s);
}

Complex inner(const ComplexVector& a, const ComplexVector& b) {
  require_same_dim(a.size(), b.size(), "inner");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
  return s;
}

ComplexVector scaled(const ComplexVector& v, Complex s) {
  ComplexVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * s;
  return r;
}

}  // namespace minherm
