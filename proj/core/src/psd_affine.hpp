#ifndef MINHERM_SRC_PSD_AFFINE_HPP
#define MINHERM_SRC_PSD_AFFINE_HPP

// Internal solver shared by the certification and companion-search modules:
// find Hermitian blocks (X_1, ..., X_B), all positive semidefinite, subject
// to real affine constraints  sum_b <X_b, E_{m,b}>_F = c_m.
//
// Method: Dykstra's alternating projections between the product PSD cone
// (projection = eigenvalue clipping) and the affine subspace (projection via
// a precomputed least-squares map on the constraint Gram matrix). Dykstra
// cannot certify infeasibility, so a stabilized positive gap between the two
// projected iterates is reported as Infeasible only past a caller-set
// threshold; otherwise the solve ends Feasible or IterationLimit.

#include <cstddef>
#include <vector>

#include "minherm/matrix.hpp"

namespace minherm::detail {

struct AffineConstraint {
  std::vector<ComplexMatrix> coeff;  // one Hermitian coefficient per block
  double rhs = 0.0;
};

struct PsdAffineProblem {
  std::vector<std::size_t> block_dims;
  std::vector<AffineConstraint> constraints;
  std::vector<ComplexMatrix> start;  // optional; zero blocks when empty
};

enum class PsdAffineStatus { Feasible, Infeasible, IterationLimit };

struct PsdAffineOptions {
  int max_iterations = 50000;
  double residual_target = 1e-10;   // affine violation of the PSD iterate
  double infeasibility_gap = 1e-6;  // declare Infeasible above this gap only
  int stall_window = 1000;          // iterations over which the gap must stabilize
  double stall_rel_change = 1e-12;
};

struct PsdAffineResult {
  PsdAffineStatus status = PsdAffineStatus::IterationLimit;
  std::vector<HermitianMatrix> blocks;  // PSD, affine-feasible when Feasible
  double gap = 0.0;                     // last distance between projected iterates
  double affine_residual = 0.0;         // max constraint violation of `blocks`
  int iterations = 0;
};

PsdAffineResult solve_psd_affine(const PsdAffineProblem& problem, const PsdAffineOptions& opts);

}  // namespace minherm::detail

#endif  // MINHERM_SRC_PSD_AFFINE_HPP
