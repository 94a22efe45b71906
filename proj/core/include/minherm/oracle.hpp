#ifndef MINHERM_ORACLE_HPP
#define MINHERM_ORACLE_HPP

#include <cstdint>

#include "minherm/matrix.hpp"

namespace minherm {

// Independent ground truth for the certifier: dist(M, Diag) computed by
// direct convex minimization of D -> ||M + diag(D)||, with no use of the
// minimality characterizations.

struct DistanceOptions {
  std::uint64_t seed = 0;
  int starts = 20;          // multistarts; the first is always D = 0
  int max_iterations = 10000;  // per start
  double tol = 1e-7;
};

struct DistanceResult {
  double distance = 0.0;
  DiagonalVector minimizer;
  int iterations = 0;  // summed over starts
  int starts = 0;
  bool converged = true;
};

/// Projected subgradient with Polyak-type steps on the convex objective
/// f(D) = max(lambda_max(M+D), -lambda_min(M+D)). Degenerate extreme
/// eigenvalue clusters use the cluster-averaged eigenvector profile as the
/// subgradient. Deterministic for a fixed seed.
DistanceResult distance_to_diagonals(const HermitianMatrix& m, const DistanceOptions& opts = {});

/// True iff |dist(M, Diag) - ||M||| <= tol.
bool is_minimal_by_oracle(const HermitianMatrix& m, double tol = 1e-5,
                          const DistanceOptions& opts = {});

}  // namespace minherm

#endif  // MINHERM_ORACLE_HPP
