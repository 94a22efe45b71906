#include "psd_affine.hpp"

#include <cmath>

#include "minherm/eigen.hpp"

namespace minherm::detail {

namespace {

using Blocks = std::vector<ComplexMatrix>;

double frob_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  // Re tr(a b*) — the real inner product on Hermitian matrices.
  double s = 0.0;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      s += a(i, j).real() * b(i, j).real() + a(i, j).imag() * b(i, j).imag();
  return s;
}

Blocks zeros_like(const std::vector<std::size_t>& dims) {
  Blocks b;
  b.reserve(dims.size());
  for (std::size_t d : dims) b.emplace_back(d);
  return b;
}

void add_scaled(Blocks& x, const Blocks& y, double s) {
  for (std::size_t k = 0; k < x.size(); ++k) x[k] += y[k] * Complex(s, 0.0);
}

double distance(const Blocks& a, const Blocks& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    ComplexMatrix d = a[k];
    d -= b[k];
    const double f = d.frobenius_norm();
    s += f * f;
  }
  return std::sqrt(s);
}

ComplexMatrix clip_psd(const ComplexMatrix& x) {
  const HermitianMatrix h = HermitianMatrix::symmetrized(x);
  const SpectralDecomposition dec = eigh(h);
  const std::size_t n = x.dim();
  ComplexMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lam = dec.eigenvalues[k];
    if (lam <= 0.0) continue;
    const ComplexVector u = dec.eigenvector(k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j) += lam * u[i] * std::conj(u[j]);
  }
  return HermitianMatrix::symmetrized(out).matrix();
}

// Least-squares map onto the affine subspace, built once: the Gram matrix of
// the constraint functionals is pseudo-inverted through its eigensystem.
class AffineProjector {
 public:
  AffineProjector(const PsdAffineProblem& problem) : problem_(problem) {
    const std::size_t m = problem.constraints.size();
    gram_pinv_ = std::vector<std::vector<double>>(m, std::vector<double>(m, 0.0));

    ComplexMatrix g(m);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a; b < m; ++b) {
        double s = 0.0;
        for (std::size_t k = 0; k < problem.block_dims.size(); ++k) {
          s += frob_inner(problem.constraints[a].coeff[k], problem.constraints[b].coeff[k]);
        }
        g(a, b) = s;
        g(b, a) = s;
      }
    }
    const SpectralDecomposition dec = eigh(HermitianMatrix::symmetrized(g));
    const double cutoff = 1e-12 * std::max(1.0, dec.eigenvalues.empty() ? 0.0 : dec.eigenvalues.front());
    for (std::size_t k = 0; k < m; ++k) {
      const double lam = dec.eigenvalues[k];
      if (lam <= cutoff) continue;
      const ComplexVector u = dec.eigenvector(k);
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
          gram_pinv_[a][b] += (u[a] * std::conj(u[b])).real() / lam;
    }
  }

  std::vector<double> violations(const Blocks& x) const {
    const std::size_t m = problem_.constraints.size();
    std::vector<double> v(m);
    for (std::size_t a = 0; a < m; ++a) {
      double s = 0.0;
      for (std::size_t k = 0; k < x.size(); ++k) s += frob_inner(x[k], problem_.constraints[a].coeff[k]);
      v[a] = s - problem_.constraints[a].rhs;
    }
    return v;
  }

  double max_violation(const Blocks& x) const {
    double worst = 0.0;
    for (double v : violations(x)) worst = std::max(worst, std::abs(v));
    return worst;
  }

  Blocks project(const Blocks& x) const {
    const std::vector<double> v = violations(x);
    const std::size_t m = v.size();
    std::vector<double> y(m, 0.0);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) y[a] += gram_pinv_[a][b] * v[b];
    Blocks out = x;
    for (std::size_t a = 0; a < m; ++a) {
      if (y[a] == 0.0) continue;
      for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] -= problem_.constraints[a].coeff[k] * Complex(y[a], 0.0);
      }
    }
    return out;
  }

 private:
  const PsdAffineProblem& problem_;
  std::vector<std::vector<double>> gram_pinv_;
};

}  // namespace

PsdAffineResult solve_psd_affine(const PsdAffineProblem& problem, const PsdAffineOptions& opts) {
  PsdAffineResult result;
  const AffineProjector affine(problem);

  // If even the unconstrained least-squares point cannot meet the affine
  // system, the system is inconsistent and no PSD solution can exist.
  {
    Blocks origin = zeros_like(problem.block_dims);
    const double rho = affine.max_violation(affine.project(origin));
    if (rho > opts.infeasibility_gap) {
      result.status = PsdAffineStatus::Infeasible;
      result.gap = rho;
      return result;
    }
  }

  Blocks x = problem.start.empty() ? zeros_like(problem.block_dims) : problem.start;
  Blocks inc_psd = zeros_like(problem.block_dims);
  Blocks inc_aff = zeros_like(problem.block_dims);

  std::vector<double> gap_history;
  gap_history.reserve(static_cast<std::size_t>(opts.max_iterations));

  for (int iter = 1; iter <= opts.max_iterations; ++iter) {
    Blocks work = x;
    add_scaled(work, inc_psd, 1.0);
    Blocks psd_point = work;
    for (std::size_t k = 0; k < psd_point.size(); ++k) psd_point[k] = clip_psd(psd_point[k]);
    inc_psd = work;
    add_scaled(inc_psd, psd_point, -1.0);

    const double viol = affine.max_violation(psd_point);
    if (viol <= opts.residual_target) {
      result.status = PsdAffineStatus::Feasible;
      result.iterations = iter;
      result.affine_residual = viol;
      result.gap = 0.0;
      result.blocks.reserve(psd_point.size());
      for (const ComplexMatrix& b : psd_point) result.blocks.push_back(HermitianMatrix::symmetrized(b));
      return result;
    }

    work = psd_point;
    add_scaled(work, inc_aff, 1.0);
    Blocks affine_point = affine.project(work);
    inc_aff = work;
    add_scaled(inc_aff, affine_point, -1.0);

    const double gap = distance(psd_point, affine_point);
    gap_history.push_back(gap);
    result.gap = gap;
    result.iterations = iter;

    if (iter > opts.stall_window && gap > opts.infeasibility_gap) {
      const double before = gap_history[static_cast<std::size_t>(iter - 1 - opts.stall_window)];
      if (std::abs(gap - before) <= opts.stall_rel_change * std::max(1.0, before)) {
        result.status = PsdAffineStatus::Infeasible;
        return result;
      }
    }

    x = affine_point;
  }

  result.status = PsdAffineStatus::IterationLimit;
  return result;
}

}  // namespace minherm::detail
