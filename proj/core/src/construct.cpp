#include "minherm/construct.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "minherm/companion.hpp"
#include "minherm/eigen.hpp"

namespace minherm {

ConstructionSpec ConstructionSpec::create(double lambda, MajorizationInstance inst, RealVector middles) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw InvariantViolated("construction requires lambda > 0");
  }
  if (middles.size() != inst.zeros()) {
    std::ostringstream msg;
    msg << "expected " << inst.zeros() << " middle eigenvalues, got " << middles.size();
    throw InvariantViolated(msg.str());
  }
  for (double mu : middles) {
    if (!std::isfinite(mu) || std::abs(mu) >= lambda * (1.0 - 1e-12)) {
      std::ostringstream msg;
      msg << "middle eigenvalue " << mu << " must satisfy |mu| < lambda = " << lambda << " strictly";
      throw InvariantViolated(msg.str());
    }
  }
  return ConstructionSpec(lambda, std::move(inst), std::move(middles));
}

BuildResult build_minimal(const ConstructionSpec& spec, std::uint64_t seed) {
  const MajorizationInstance& inst = spec.instance();
  const UnistochasticResult frame = schur_horn_zero_diag(inst);
  const std::size_t n = inst.dim();
  const std::size_t r = inst.positive_part().size();
  const std::size_t s = inst.negative_part().size();

  RealVector eigs(n);
  for (std::size_t k = 0; k < r; ++k) eigs[k] = spec.lambda();
  for (std::size_t k = 0; k < inst.zeros(); ++k) eigs[r + k] = spec.middles()[k];
  for (std::size_t k = 0; k < s; ++k) eigs[n - s + k] = -spec.lambda();

  // M = U diag(eigs) U^T with the zero-diagonal frame's eigenvector columns.
  const RealMatrix& u = frame.orthogonal;
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += eigs[k] * u(i, k) * u(j, k);
      m(i, j) = acc;
    }
  }

  BuildResult out;
  out.matrix = HermitianMatrix::symmetrized(m);
  out.provenance.lambda = spec.lambda();
  out.provenance.positive_weights = inst.positive_part();
  out.provenance.negative_weights = inst.negative_part();
  out.provenance.middles = spec.middles();
  out.provenance.assigned_eigenvalues = std::move(eigs);
  out.provenance.orthogonal = u;
  out.provenance.seed = seed;
  return out;
}

namespace {

HermitianMatrix range_projection(const HermitianMatrix& p, double rank_tol) {
  const SpectralDecomposition dec = eigh(p);
  ComplexMatrix q(p.dim());
  for (std::size_t k = 0; k < dec.dim(); ++k) {
    if (dec.eigenvalues[k] <= rank_tol) continue;
    const ComplexVector u = dec.eigenvector(k);
    for (std::size_t i = 0; i < p.dim(); ++i)
      for (std::size_t j = 0; j < p.dim(); ++j) q(i, j) += u[i] * std::conj(u[j]);
  }
  return HermitianMatrix::symmetrized(q);
}

}  // namespace

HermitianMatrix build_from_companions(const HermitianMatrix& p1, const HermitianMatrix& p2,
                                      double lambda, const HermitianMatrix& remainder) {
  if (p1.dim() != p2.dim() || p1.dim() != remainder.dim()) {
    throw DimensionMismatch("build_from_companions: dimensions differ");
  }
  if (!(lambda > 0.0)) throw PreconditionViolated("build_from_companions: lambda must be > 0");

  const CompanionReport rep = is_companion_pair(p1, p2);
  if (!rep.pass) {
    std::ostringstream msg;
    msg << "build_from_companions: (P1, P2) is not a companion pair (product residual "
        << rep.product_residual << ", diag residual " << rep.diag_residual << ")";
    throw PreconditionViolated(msg.str());
  }

  const double rank_tol_1 = 1e-10 * std::max(1.0, operator_norm(p1));
  const double rank_tol_2 = 1e-10 * std::max(1.0, operator_norm(p2));
  const HermitianMatrix proj1 = range_projection(p1, rank_tol_1);
  const HermitianMatrix proj2 = range_projection(p2, rank_tol_2);

  const double overlap = (proj1.matrix() * proj2.matrix()).frobenius_norm();
  if (overlap > 1e-10 * std::max(1.0, proj1.frobenius_norm() * proj2.frobenius_norm())) {
    std::ostringstream msg;
    msg << "build_from_companions: ranges of P1 and P2 are not orthogonal (overlap " << overlap << ")";
    throw PreconditionViolated(msg.str());
  }

  const double r_scale = std::max(1.0, remainder.frobenius_norm());
  const double r1 = (proj1.matrix() * remainder.matrix()).frobenius_norm();
  const double r2 = (proj2.matrix() * remainder.matrix()).frobenius_norm();
  if (r1 > 1e-10 * r_scale || r2 > 1e-10 * r_scale) {
    std::ostringstream msg;
    msg << "build_from_companions: remainder is not supported away from the companion ranges "
        << "(P_S1 R residual " << r1 << ", P_S2 R residual " << r2 << ")";
    throw PreconditionViolated(msg.str());
  }

  const double r_norm = operator_norm(remainder);
  if (r_norm >= lambda * (1.0 - 1e-12)) {
    std::ostringstream msg;
    msg << "build_from_companions: ||R|| = " << r_norm << " must be strictly below lambda = " << lambda;
    throw PreconditionViolated(msg.str());
  }

  ComplexMatrix m = proj1.matrix() * Complex(lambda, 0.0);
  m -= proj2.matrix() * Complex(lambda, 0.0);
  m += remainder.matrix();
  return HermitianMatrix::symmetrized(m);
}

}  // namespace minherm
