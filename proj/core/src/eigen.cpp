#include "minherm/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace minherm {

namespace {

double offdiag_frobenius(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) s += std::norm(a(i, j));
  return std::sqrt(2.0 * s);
}

// One complex Jacobi rotation in the (p,q) plane, chosen to annihilate
// a(p,q). The pivot's phase is absorbed first so the 2x2 subproblem is real
// symmetric; the accumulated transform stays unitary.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex beta = a(p, q);
  const double b = std::abs(beta);
  if (b == 0.0) return;
  const Complex phase = beta / b;             // e^{i theta}
  const Complex phase_conj = std::conj(phase);

  const double alpha = a(p, p).real();
  const double gamma = a(q, q).real();
  const double tau = (gamma - alpha) / (2.0 * b);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - (s * phase_conj) * akq;
    a(k, q) = s * akp + (c * phase_conj) * akq;
    a(p, k) = std::conj(a(k, p));
    a(q, k) = std::conj(a(k, q));
  }
  a(p, p) = alpha - t * b;
  a(q, q) = gamma + t * b;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - (s * phase_conj) * vkq;
    v(k, q) = s * vkp + (c * phase_conj) * vkq;
  }
}

void fix_phase(ComplexMatrix& v, std::size_t col) {
  const std::size_t n = v.dim();
  std::size_t imax = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double m = std::abs(v(i, col));
    if (m > best + 1e-15) {  // strict improvement; ties keep the lowest index
      best = m;
      imax = i;
    }
  }
  const Complex z = v(imax, col);
  const double m = std::abs(z);
  if (m == 0.0) return;
  const Complex rot = std::conj(z) / m;
  for (std::size_t i = 0; i < n; ++i) v(i, col) *= rot;
  v(imax, col) = Complex(std::abs(v(imax, col)), 0.0);
}

}  // namespace

SpectralDecomposition eigh(const HermitianMatrix& m) {
  const std::size_t n = m.dim();
  // Work on the exact Hermitian projection so tiny input asymmetry
  // (tolerated by the validation) cannot drift through the sweeps.
  ComplexMatrix a = HermitianMatrix::symmetrized(m.matrix()).matrix();
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double frob = a.frobenius_norm();
  const double conv_tol = 1e-13 * frob;
  const double skip_tol = n > 0 ? conv_tol / (10.0 * static_cast<double>(n)) : 0.0;
  const int max_sweeps = 100;

  bool converged = frob == 0.0 || n < 2;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    if (offdiag_frobenius(a) <= conv_tol) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (std::abs(a(p, q)) > skip_tol) rotate(a, v, p, q);
  }
  if (!converged && offdiag_frobenius(a) > conv_tol) {
    std::ostringstream msg;
    msg << "Jacobi eigensolver failed to converge: off-diagonal mass " << offdiag_frobenius(a)
        << " above " << conv_tol << " after " << max_sweeps << " sweeps";
    throw NoConvergence(msg.str());
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  SpectralDecomposition dec;
  dec.eigenvalues.resize(n);
  dec.eigenvectors = ComplexMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    dec.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) dec.eigenvectors(i, k) = v(i, order[k]);
    fix_phase(dec.eigenvectors, k);
  }
  return dec;
}

double operator_norm(const HermitianMatrix& m) {
  if (m.dim() == 0) return 0.0;
  const SpectralDecomposition dec = eigh(m);
  return std::max(std::abs(dec.eigenvalues.front()), std::abs(dec.eigenvalues.back()));
}

std::vector<EigCluster> cluster(const SpectralDecomposition& dec, double tol) {
  if (tol <= 0.0) throw PreconditionViolated("cluster: tol must be positive");
  const std::size_t n = dec.dim();
  std::vector<EigCluster> out;
  if (n == 0) return out;

  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double gap = dec.eigenvalues[k] - dec.eigenvalues[k + 1];
    if (gap >= 0.5 * tol && gap <= 2.0 * tol) {
      std::ostringstream msg;
      msg << "eigenvalue gap " << gap << " between positions " << k + 1 << " and " << k + 2
          << " lies inside the ambiguous band [" << 0.5 * tol << ", " << 2.0 * tol
          << "]; adjust the cluster tolerance";
      throw AmbiguousClustering(msg.str());
    }
  }

  EigCluster current;
  current.columns.push_back(0);
  for (std::size_t k = 1; k < n; ++k) {
    const double gap = dec.eigenvalues[k - 1] - dec.eigenvalues[k];
    if (gap > tol) {
      out.push_back(std::move(current));
      current = EigCluster{};
    }
    current.columns.push_back(k);
  }
  out.push_back(std::move(current));

  for (EigCluster& c : out) {
    const double first = dec.eigenvalues[c.columns.front()];
    const double last = dec.eigenvalues[c.columns.back()];
    if (first - last > tol) {
      std::ostringstream msg;
      msg << "chained small gaps spread a would-be cluster over " << first - last
          << " > tol " << tol << "; no valid partition exists at this tolerance";
      throw AmbiguousClustering(msg.str());
    }
    double sum = 0.0;
    for (std::size_t k : c.columns) sum += dec.eigenvalues[k];
    c.value = sum / static_cast<double>(c.columns.size());
  }
  return out;
}

double default_cluster_tol(const SpectralDecomposition& dec) {
  double top = 0.0;
  if (!dec.eigenvalues.empty()) {
    top = std::max(std::abs(dec.eigenvalues.front()), std::abs(dec.eigenvalues.back()));
  }
  return 1e-8 * std::max(1.0, top);
}

HermitianMatrix spectral_projection(const SpectralDecomposition& dec, double target, double tol) {
  const std::vector<EigCluster> clusters = cluster(dec, tol);
  for (const EigCluster& c : clusters) {
    if (std::abs(c.value - target) <= tol) {
      ComplexMatrix q(dec.dim());
      for (std::size_t col : c.columns) {
        const ComplexVector u = dec.eigenvector(col);
        for (std::size_t i = 0; i < dec.dim(); ++i)
          for (std::size_t j = 0; j < dec.dim(); ++j) q(i, j) += u[i] * std::conj(u[j]);
      }
      return HermitianMatrix::symmetrized(q);
    }
  }
  std::ostringstream msg;
  msg << "no eigenvalue cluster within " << tol << " of " << target;
  throw NoSuchEigenvalue(msg.str());
}

}  // namespace minherm
