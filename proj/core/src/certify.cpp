#include "minherm/certify.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "minherm/eigen.hpp"
#include "psd_affine.hpp"

namespace minherm {

namespace {

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

void check_orthonormal(const std::vector<ComplexVector>& basis, const char* name) {
  if (basis.empty()) {
    throw PreconditionViolated(std::string("feasibility_solve: ") + name + " basis is empty");
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      const Complex g = inner(basis[i], basis[j]);
      const double defect = std::abs(g - (i == j ? Complex(1.0) : Complex(0.0)));
      if (defect > 1e-10) {
        std::ostringstream msg;
        msg << "feasibility_solve: " << name << " basis columns " << i + 1 << "," << j + 1
            << " not orthonormal (defect " << defect << ")";
        throw PreconditionViolated(msg.str());
      }
    }
  }
}

// Profile functional matrix: <X, E_m> = (B X B*)_mm for a basis given as
// columns; E_m = w w* with w the conjugated m-th row of B.
ComplexMatrix row_profile_matrix(const std::vector<ComplexVector>& basis, std::size_t row) {
  const std::size_t r = basis.size();
  ComplexMatrix e(r);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t l = 0; l < r; ++l) e(k, l) = std::conj(basis[k][row]) * basis[l][row];
  return e;
}

double min_eigenvalue(const HermitianMatrix& p) {
  const SpectralDecomposition dec = eigh(p);
  return dec.eigenvalues.back();
}

}  // namespace

ConditionReport check_conditions(const HermitianMatrix& m, const HermitianMatrix& p, double tol) {
  if (m.dim() != p.dim()) throw DimensionMismatch("check_conditions: dimensions differ");

  ConditionReport rep;
  const SpectralDecomposition dec = eigh(m);
  rep.lambda = m.dim() == 0 ? 0.0
                            : std::max(std::abs(dec.eigenvalues.front()), std::abs(dec.eigenvalues.back()));

  const ComplexMatrix& mm = m.matrix();
  const ComplexMatrix& pm = p.matrix();
  const ComplexMatrix prod = pm * mm;

  ComplexMatrix square_defect = prod * mm;
  square_defect -= pm * Complex(rep.lambda * rep.lambda, 0.0);
  rep.square_residual = square_defect.frobenius_norm();

  double worst_diag = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) worst_diag = std::max(worst_diag, std::abs(prod(i, i)));
  rep.diag_residual = worst_diag;

  rep.commutator_residual = commutator(pm, mm).frobenius_norm();
  rep.min_eigenvalue = min_eigenvalue(p);

  const double p_scale = std::max(p.frobenius_norm(), 1e-300);
  const double lam = std::max(rep.lambda, 1e-300);
  rep.square_ok = rep.square_residual <= tol * lam * lam * p_scale;
  rep.diag_ok = rep.diag_residual <= tol * lam * p_scale;
  rep.commutator_ok = rep.commutator_residual <= tol * lam * p_scale;
  rep.psd_ok = rep.min_eigenvalue >= -tol * std::max(p.trace_real(), p_scale);
  return rep;
}

HermitianMatrix reduce_to_commuting(const HermitianMatrix& m, const HermitianMatrix& p) {
  constexpr double kTol = 1e-8;
  const ConditionReport rep = check_conditions(m, p, kTol);
  if (!rep.square_ok || !rep.diag_ok || !rep.psd_ok) {
    std::ostringstream msg;
    msg << "reduce_to_commuting: witness fails the certificate conditions (square residual "
        << rep.square_residual << ", diag residual " << rep.diag_residual << ", min eigenvalue "
        << rep.min_eigenvalue << ")";
    throw PreconditionViolated(msg.str());
  }

  const SpectralDecomposition dec = eigh(m);
  const double tol = default_cluster_tol(dec);
  const std::vector<EigCluster> clusters = cluster(dec, tol);

  ComplexMatrix reduced(m.dim());
  for (const EigCluster& c : clusters) {
    if (std::abs(std::abs(c.value) - rep.lambda) > tol) continue;
    const ComplexMatrix q = spectral_projection(dec, c.value, tol).matrix();
    reduced += q * p.matrix() * q;
  }
  return HermitianMatrix::symmetrized(reduced);
}

FeasibilityResult feasibility_solve(const std::vector<ComplexVector>& basis_plus,
                                    const std::vector<ComplexVector>& basis_minus,
                                    const FeasibilityOptions& opts) {
  check_orthonormal(basis_plus, "plus");
  check_orthonormal(basis_minus, "minus");
  const std::size_t n = basis_plus.front().size();
  if (basis_minus.front().size() != n) {
    throw DimensionMismatch("feasibility_solve: bases live in different spaces");
  }
  const std::size_t r = basis_plus.size();
  const std::size_t s = basis_minus.size();

  detail::PsdAffineProblem problem;
  problem.block_dims = {r, s};

  // diag(B+ X+ B+*) = diag(B- X- B-*), one real equation per canonical row.
  for (std::size_t i = 0; i < n; ++i) {
    detail::AffineConstraint c;
    c.coeff.push_back(row_profile_matrix(basis_plus, i));
    c.coeff.push_back(row_profile_matrix(basis_minus, i) * Complex(-1.0, 0.0));
    c.rhs = 0.0;
    problem.constraints.push_back(std::move(c));
  }
  // Normalization tr X+ = 1 excludes the vacuous zero witness and makes the
  // feasible set compact.
  {
    detail::AffineConstraint c;
    c.coeff.push_back(ComplexMatrix::identity(r));
    c.coeff.push_back(ComplexMatrix(s));
    c.rhs = 1.0;
    problem.constraints.push_back(std::move(c));
  }

  problem.start.emplace_back(ComplexMatrix::identity(r) * Complex(1.0 / static_cast<double>(r), 0.0));
  problem.start.emplace_back(ComplexMatrix::identity(s) * Complex(1.0 / static_cast<double>(s), 0.0));

  detail::PsdAffineOptions solver_opts;
  solver_opts.max_iterations = opts.max_iterations;
  solver_opts.residual_target = opts.residual_target;
  solver_opts.infeasibility_gap = opts.infeasibility_gap;

  const detail::PsdAffineResult r0 = detail::solve_psd_affine(problem, solver_opts);

  FeasibilityResult out;
  out.gap = r0.gap;
  out.iterations = r0.iterations;
  switch (r0.status) {
    case detail::PsdAffineStatus::Feasible:
      out.status = FeasibilityStatus::Feasible;
      out.x_plus = r0.blocks[0];
      out.x_minus = r0.blocks[1];
      break;
    case detail::PsdAffineStatus::Infeasible:
      out.status = FeasibilityStatus::Infeasible;
      break;
    case detail::PsdAffineStatus::IterationLimit:
      out.status = FeasibilityStatus::IterationLimit;
      break;
  }
  return out;
}

namespace {

HermitianMatrix conjugate_by_basis(const std::vector<ComplexVector>& basis, const HermitianMatrix& x) {
  // B X B* for a basis given as columns.
  const std::size_t n = basis.front().size();
  const std::size_t r = basis.size();
  ComplexMatrix out(n);
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t l = 0; l < r; ++l) {
      const Complex xkl = x(k, l);
      if (xkl == Complex(0.0)) continue;
      for (std::size_t i = 0; i < n; ++i) {
        const Complex left = basis[k][i] * xkl;
        for (std::size_t j = 0; j < n; ++j) out(i, j) += left * std::conj(basis[l][j]);
      }
    }
  }
  return HermitianMatrix::symmetrized(out);
}

std::vector<ComplexVector> cluster_basis(const SpectralDecomposition& dec, const EigCluster& c) {
  std::vector<ComplexVector> basis;
  basis.reserve(c.columns.size());
  for (std::size_t col : c.columns) basis.push_back(dec.eigenvector(col));
  return basis;
}

}  // namespace

CertifyOutcome certify_minimal(const HermitianMatrix& m, const CertifyOptions& opts) {
  CertifyOutcome out;
  const SpectralDecomposition dec = eigh(m);
  const double lambda =
      m.dim() == 0 ? 0.0 : std::max(std::abs(dec.eigenvalues.front()), std::abs(dec.eigenvalues.back()));
  out.lambda = lambda;

  const double ctol = opts.cluster_tol > 0.0 ? opts.cluster_tol : default_cluster_tol(dec);
  if (lambda <= ctol) {
    // The zero matrix: every condition degenerates and M is trivially minimal.
    out.verdict = Verdict::Minimal;
    out.lambda = 0.0;
    return out;
  }

  const std::vector<EigCluster> clusters = cluster(dec, ctol);
  const EigCluster* top = nullptr;
  const EigCluster* bottom = nullptr;
  for (const EigCluster& c : clusters) {
    if (std::abs(c.value - lambda) <= ctol) top = &c;
    if (std::abs(c.value + lambda) <= ctol) bottom = &c;
  }
  if (top == nullptr || bottom == nullptr) {
    out.verdict = Verdict::NotMinimal;
    out.reason = "spectrum not centered";
    out.diagnostics["top_eigenvalue"] = dec.eigenvalues.front();
    out.diagnostics["bottom_eigenvalue"] = dec.eigenvalues.back();
    return out;
  }

  FeasibilityOptions fopts;
  fopts.max_iterations = opts.max_iterations;
  fopts.residual_target = opts.residual_target;
  fopts.infeasibility_gap = opts.infeasibility_gap;

  const std::vector<ComplexVector> basis_plus = cluster_basis(dec, *top);
  const std::vector<ComplexVector> basis_minus = cluster_basis(dec, *bottom);
  const FeasibilityResult feas = feasibility_solve(basis_plus, basis_minus, fopts);

  out.diagnostics["feasibility_gap"] = feas.gap;
  out.diagnostics["feasibility_iterations"] = feas.iterations;

  if (feas.status == FeasibilityStatus::Infeasible) {
    out.verdict = Verdict::NotMinimal;
    out.reason = "infeasible";
    return out;
  }
  if (feas.status == FeasibilityStatus::IterationLimit) {
    out.verdict = Verdict::Inconclusive;
    out.reason = "feasibility solve hit the iteration limit";
    return out;
  }

  MinimalityCertificate cert;
  cert.lambda = lambda;
  cert.p_plus = conjugate_by_basis(basis_plus, feas.x_plus);
  cert.p_minus = conjugate_by_basis(basis_minus, feas.x_minus);
  cert.p = HermitianMatrix::symmetrized(cert.p_plus.matrix() + cert.p_minus.matrix());

  const ConditionReport rep = check_conditions(m, cert.p, 1e-8);
  cert.residuals["square"] = rep.square_residual;
  cert.residuals["diag"] = rep.diag_residual;
  cert.residuals["commutator"] = rep.commutator_residual;
  cert.residuals["min_eigenvalue_p"] = rep.min_eigenvalue;
  cert.residuals["min_eigenvalue_p_plus"] = min_eigenvalue(cert.p_plus);
  cert.residuals["min_eigenvalue_p_minus"] = min_eigenvalue(cert.p_minus);
  cert.residuals["trace_p_plus"] = cert.p_plus.trace_real();
  double diag_mismatch = 0.0;
  {
    const RealVector dp = cert.p_plus.diagonal();
    const RealVector dm = cert.p_minus.diagonal();
    for (std::size_t i = 0; i < dp.size(); ++i) diag_mismatch = std::max(diag_mismatch, std::abs(dp[i] - dm[i]));
  }
  cert.residuals["diag_mismatch"] = diag_mismatch;

  out.verdict = Verdict::Minimal;
  out.certificate = std::move(cert);
  return out;
}

}  // namespace minherm
