#ifndef MINHERM_COMPANION_HPP
#define MINHERM_COMPANION_HPP

#include <optional>
#include <string>
#include <vector>

#include "minherm/matrix.hpp"

namespace minherm {

// Two PSD matrices are companions when their product is zero and they share
// the same canonical diagonal. Companion pairs are the building blocks of
// minimal matrices: lambda * P_range(P) - lambda * P_range(Q) + R is minimal
// for any admissible remainder R.

/// Residual report for the companion-pair predicate.
struct CompanionReport {
  double min_eigenvalue_p = 0.0;
  double min_eigenvalue_q = 0.0;
  double product_residual = 0.0;  // ||PQ||_F
  double diag_residual = 0.0;     // max_i |P_ii - Q_ii|
  double trace_residual = 0.0;
  bool pass = false;
};

/// Checks all companion-pair invariants at tolerance tol.
/// Throws DimensionMismatch.
CompanionReport is_companion_pair(const HermitianMatrix& p, const HermitianMatrix& q,
                                  double tol = 1e-9);

struct CompanionSearch {
  enum class Outcome { Found, NoCompanion, Inconclusive };
  Outcome outcome = Outcome::Inconclusive;
  std::optional<HermitianMatrix> companion;
  std::string detail;
  double gap = 0.0;
  int iterations = 0;
};

struct FindCompanionOptions {
  double rank_tol = 0.0;  // 0 -> 1e-10 * max(1, ||P||)
  int max_iterations = 50000;
  double residual_target = 1e-10;
  double infeasibility_gap = 1e-6;
};

/// Searches for a companion of a PSD matrix P. An invertible P has none
/// (decided structurally after the rank check). Otherwise a PSD Q supported
/// on ker(P) with diag(Q) = diag(P) is sought by convex feasibility; the PSD
/// variable implicitly searches over all orthonormal kernel eigenvector
/// choices, which keeps degenerate eigenspaces exact. A returned Q always
/// passes is_companion_pair. Throws PreconditionViolated when P is not PSD.
CompanionSearch find_companion(const HermitianMatrix& p, const FindCompanionOptions& opts = {});

enum class HullKind { Cone, Convex };

struct HullWitness {
  std::vector<double> coefficients;  // nonnegative, one per generator
  HullKind kind = HullKind::Cone;
  double residual = 0.0;  // || sum_j c_j g_j - target ||_inf
};

/// Membership of target in the cone / convex hull of the generators, decided
/// by phase-I simplex (exact for the LP; Bland's rule prevents cycling).
/// Returns std::nullopt when target is not a member.
std::optional<HullWitness> hull_membership(const RealVector& target,
                                           const std::vector<RealVector>& generators, HullKind kind);

/// The fixed-basis companion test: given positive weights a_i on orthonormal
/// vectors V_pos and an orthonormal kernel family V_ker, solve
///   sum_i a_i |v_i|^2-profile = sum_j x_j |v_j|^2-profile,  x_j >= 0
/// via cone membership. Returns the x_j or std::nullopt. For degenerate
/// eigenspaces this test is sufficient but not necessary; find_companion is
/// the authoritative decision procedure. Throws OrthogonalityViolated when
/// the families are not mutually orthogonal to 1e-10.
std::optional<std::vector<double>> fixed_basis_companion_check(
    const RealVector& weights, const std::vector<ComplexVector>& positive_basis,
    const std::vector<ComplexVector>& kernel_basis);

}  // namespace minherm

#endif  // MINHERM_COMPANION_HPP
