#include "minherm/companion.hpp"

#include <cmath>
#include <sstream>

#include "minherm/eigen.hpp"
#include "minherm/simplex.hpp"
#include "psd_affine.hpp"

namespace minherm {

CompanionReport is_companion_pair(const HermitianMatrix& p, const HermitianMatrix& q, double tol) {
  if (p.dim() != q.dim()) throw DimensionMismatch("is_companion_pair: dimensions differ");

  CompanionReport rep;
  rep.min_eigenvalue_p = eigh(p).eigenvalues.back();
  rep.min_eigenvalue_q = eigh(q).eigenvalues.back();
  rep.product_residual = (p.matrix() * q.matrix()).frobenius_norm();

  const RealVector dp = p.diagonal();
  const RealVector dq = q.diagonal();
  double worst = 0.0, tp = 0.0, tq = 0.0;
  for (std::size_t i = 0; i < dp.size(); ++i) {
    worst = std::max(worst, std::abs(dp[i] - dq[i]));
    tp += dp[i];
    tq += dq[i];
  }
  rep.diag_residual = worst;
  rep.trace_residual = std::abs(tp - tq);

  const bool psd_p = rep.min_eigenvalue_p >= -tol * std::max(tp, 1.0);
  const bool psd_q = rep.min_eigenvalue_q >= -tol * std::max(tq, 1.0);
  const bool product_ok =
      rep.product_residual <= tol * std::max(p.frobenius_norm() * q.frobenius_norm(), 1e-300);
  rep.pass = psd_p && psd_q && product_ok && rep.diag_residual <= tol && rep.trace_residual <= tol;
  return rep;
}

CompanionSearch find_companion(const HermitianMatrix& p, const FindCompanionOptions& opts) {
  CompanionSearch out;
  const SpectralDecomposition dec = eigh(p);
  const double top = dec.eigenvalues.empty() ? 0.0 : dec.eigenvalues.front();
  const double rank_tol = opts.rank_tol > 0.0 ? opts.rank_tol : 1e-10 * std::max(1.0, top);

  if (dec.eigenvalues.back() < -rank_tol) {
    std::ostringstream msg;
    msg << "find_companion: input is not PSD (eigenvalue " << dec.eigenvalues.back() << ")";
    throw PreconditionViolated(msg.str());
  }

  std::vector<std::size_t> kernel_cols;
  for (std::size_t k = 0; k < dec.dim(); ++k) {
    if (std::abs(dec.eigenvalues[k]) <= rank_tol) kernel_cols.push_back(k);
  }

  if (kernel_cols.empty()) {
    // Invertible P: any Q with PQ = 0 is zero, and a zero Q forces diag(P) = 0
    // hence P = 0. Decided structurally, no search.
    out.outcome = CompanionSearch::Outcome::NoCompanion;
    out.detail = "P has trivial kernel";
    return out;
  }
  if (kernel_cols.size() == dec.dim()) {
    // P = 0: the zero matrix is its own (unique) companion.
    out.outcome = CompanionSearch::Outcome::Found;
    out.companion = HermitianMatrix::symmetrized(ComplexMatrix(p.dim()));
    out.detail = "P = 0, companion is 0";
    return out;
  }

  // Find X PSD on the kernel coordinates with diag(B X B*) = diag(P).
  const std::size_t s = kernel_cols.size();
  std::vector<ComplexVector> kernel_basis;
  kernel_basis.reserve(s);
  for (std::size_t k : kernel_cols) kernel_basis.push_back(dec.eigenvector(k));

  detail::PsdAffineProblem problem;
  problem.block_dims = {s};
  const RealVector target = p.diagonal();
  for (std::size_t i = 0; i < p.dim(); ++i) {
    detail::AffineConstraint c;
    ComplexMatrix e(s);
    for (std::size_t k = 0; k < s; ++k)
      for (std::size_t l = 0; l < s; ++l)
        e(k, l) = std::conj(kernel_basis[k][i]) * kernel_basis[l][i];
    c.coeff.push_back(std::move(e));
    c.rhs = target[i];
    problem.constraints.push_back(std::move(c));
  }
  problem.start.emplace_back(ComplexMatrix::identity(s) *
                             Complex(p.trace_real() / static_cast<double>(s), 0.0));

  detail::PsdAffineOptions solver_opts;
  solver_opts.max_iterations = opts.max_iterations;
  solver_opts.residual_target = opts.residual_target;
  solver_opts.infeasibility_gap = opts.infeasibility_gap;

  const detail::PsdAffineResult result = detail::solve_psd_affine(problem, solver_opts);
  out.gap = result.gap;
  out.iterations = result.iterations;

  switch (result.status) {
    case detail::PsdAffineStatus::Feasible: {
      const ComplexMatrix& x = result.blocks[0].matrix();
      ComplexMatrix q(p.dim());
      for (std::size_t k = 0; k < s; ++k) {
        for (std::size_t l = 0; l < s; ++l) {
          const Complex xkl = x(k, l);
          if (xkl == Complex(0.0)) continue;
          for (std::size_t i = 0; i < p.dim(); ++i) {
            const Complex left = kernel_basis[k][i] * xkl;
            for (std::size_t j = 0; j < p.dim(); ++j) q(i, j) += left * std::conj(kernel_basis[l][j]);
          }
        }
      }
      out.outcome = CompanionSearch::Outcome::Found;
      out.companion = HermitianMatrix::symmetrized(q);
      break;
    }
    case detail::PsdAffineStatus::Infeasible:
      out.outcome = CompanionSearch::Outcome::NoCompanion;
      out.detail = "diagonal of P is not reachable from the kernel (stabilized feasibility gap)";
      break;
    case detail::PsdAffineStatus::IterationLimit:
      out.outcome = CompanionSearch::Outcome::Inconclusive;
      out.detail = "feasibility solve hit the iteration limit";
      break;
  }
  return out;
}

std::optional<HullWitness> hull_membership(const RealVector& target,
                                           const std::vector<RealVector>& generators, HullKind kind) {
  if (generators.empty()) throw PreconditionViolated("hull_membership: no generators");
  const std::size_t n = target.size();
  for (const RealVector& g : generators) {
    if (g.size() != n) throw DimensionMismatch("hull_membership: generator dimension mismatch");
  }

  const std::size_t m = kind == HullKind::Convex ? n + 1 : n;
  std::vector<std::vector<double>> rows(m, std::vector<double>(generators.size(), 0.0));
  std::vector<double> rhs(m, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < generators.size(); ++j) rows[i][j] = generators[j][i];
    rhs[i] = target[i];
  }
  if (kind == HullKind::Convex) {
    for (std::size_t j = 0; j < generators.size(); ++j) rows[n][j] = 1.0;
    rhs[n] = 1.0;
  }

  const LpFeasibility lp = solve_equality_feasibility(rows, rhs);
  if (!lp.feasible) return std::nullopt;

  HullWitness w;
  w.kind = kind;
  w.coefficients = lp.x;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double acc = -target[i];
    for (std::size_t j = 0; j < generators.size(); ++j) acc += lp.x[j] * generators[j][i];
    worst = std::max(worst, std::abs(acc));
  }
  w.residual = worst;
  return w;
}

std::optional<std::vector<double>> fixed_basis_companion_check(
    const RealVector& weights, const std::vector<ComplexVector>& positive_basis,
    const std::vector<ComplexVector>& kernel_basis) {
  if (weights.size() != positive_basis.size()) {
    throw DimensionMismatch("fixed_basis_companion_check: one weight per positive vector required");
  }
  if (positive_basis.empty() || kernel_basis.empty()) {
    throw PreconditionViolated("fixed_basis_companion_check: empty basis");
  }
  for (const ComplexVector& u : positive_basis) {
    for (const ComplexVector& v : kernel_basis) {
      const double g = std::abs(inner(u, v));
      if (g > 1e-10) {
        std::ostringstream msg;
        msg << "positive and kernel families are not orthogonal (Gram residual " << g << ")";
        throw OrthogonalityViolated(msg.str());
      }
    }
  }

  const std::size_t n = positive_basis.front().size();
  RealVector target(n, 0.0);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const RealVector prof = abs_profile(positive_basis[i]);
    for (std::size_t k = 0; k < n; ++k) target[k] += weights[i] * prof[k];
  }
  std::vector<RealVector> generators;
  generators.reserve(kernel_basis.size());
  for (const ComplexVector& v : kernel_basis) generators.push_back(abs_profile(v));

  const auto witness = hull_membership(target, generators, HullKind::Cone);
  if (!witness) return std::nullopt;
  return witness->coefficients;
}

}  // namespace minherm
