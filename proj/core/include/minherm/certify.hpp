#ifndef MINHERM_CERTIFY_HPP
#define MINHERM_CERTIFY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minherm/matrix.hpp"

namespace minherm {

// A Hermitian M is minimal (||M|| <= ||M+D|| for every real diagonal D)
// exactly when a nonzero PSD witness P exists with P M^2 = lambda^2 P and
// diag(PM) = 0, where lambda = ||M||; such a P can always be chosen to
// commute with M, splitting into PSD parts supported on the +/-lambda
// eigenspaces with matching canonical diagonals. This module decides
// minimality by solving that split form as a convex feasibility problem.

/// Residuals of the three witness conditions for a candidate P.
struct ConditionReport {
  double lambda = 0.0;             // ||M||
  double square_residual = 0.0;    // ||P M^2 - lambda^2 P||_F
  double diag_residual = 0.0;      // max_i |(PM)_ii|
  double commutator_residual = 0.0;  // ||PM - MP||_F
  double min_eigenvalue = 0.0;     // of P
  bool square_ok = false;
  bool diag_ok = false;
  bool commutator_ok = false;
  bool psd_ok = false;
  bool pass() const { return square_ok && diag_ok && commutator_ok && psd_ok; }
};

/// Evaluates the witness conditions at tolerance tol (residuals are compared
/// against tol times their natural scale). Throws DimensionMismatch.
ConditionReport check_conditions(const HermitianMatrix& m, const HermitianMatrix& p, double tol);

/// Block reduction P -> Q_l P Q_l + Q_{-l} P Q_{-l} onto the +/-lambda
/// eigenspaces. Requires P to pass the square and zero-diagonal conditions
/// (throws PreconditionViolated otherwise); the output additionally commutes
/// with M.
HermitianMatrix reduce_to_commuting(const HermitianMatrix& m, const HermitianMatrix& p);

/// PSD witness pair supported on the +/-lambda eigenspaces with equal
/// canonical diagonals; p = p_plus + p_minus is the assembled witness.
struct MinimalityCertificate {
  double lambda = 0.0;
  HermitianMatrix p_plus;
  HermitianMatrix p_minus;
  HermitianMatrix p;
  std::map<std::string, double> residuals;
};

enum class Verdict { Minimal, NotMinimal, Inconclusive };

struct CertifyOutcome {
  Verdict verdict = Verdict::Inconclusive;
  double lambda = 0.0;
  std::optional<MinimalityCertificate> certificate;  // set iff Minimal with lambda > 0
  std::string reason;                                // set iff NotMinimal / Inconclusive
  std::map<std::string, double> diagnostics;
};

struct CertifyOptions {
  double cluster_tol = 0.0;  // 0 -> 1e-8 * max(1, ||M||)
  int max_iterations = 50000;
  double residual_target = 1e-10;
  double infeasibility_gap = 1e-6;
};

/// Decides minimality of M. The zero matrix is trivially minimal (lambda = 0,
/// no certificate). NotMinimal reasons are machine-checkable: "spectrum not
/// centered" (-||M|| is not an eigenvalue) or "infeasible" (stabilized
/// feasibility gap above threshold, reported in diagnostics).
CertifyOutcome certify_minimal(const HermitianMatrix& m, const CertifyOptions& opts = {});

enum class FeasibilityStatus { Feasible, Infeasible, IterationLimit };

struct FeasibilityResult {
  FeasibilityStatus status = FeasibilityStatus::IterationLimit;
  HermitianMatrix x_plus;   // r x r PSD, trace 1 (when Feasible)
  HermitianMatrix x_minus;  // s x s PSD
  double gap = 0.0;
  int iterations = 0;
};

struct FeasibilityOptions {
  int max_iterations = 50000;
  double residual_target = 1e-10;
  double infeasibility_gap = 1e-6;
};

/// Convex core of the certifier: given orthonormal bases of the +/-lambda
/// eigenspaces, find PSD X+ (trace 1) and X- with
/// diag(B+ X+ B+*) = diag(B- X- B-*). Deterministic. Throws
/// PreconditionViolated when a basis is empty or not orthonormal to 1e-10.
FeasibilityResult feasibility_solve(const std::vector<ComplexVector>& basis_plus,
                                    const std::vector<ComplexVector>& basis_minus,
                                    const FeasibilityOptions& opts = {});

}  // namespace minherm

#endif  // MINHERM_CERTIFY_HPP
