#ifndef MINHERM_CONSTRUCT_HPP
#define MINHERM_CONSTRUCT_HPP

#include <cstdint>
#include <vector>

#include "minherm/majorize.hpp"
#include "minherm/matrix.hpp"

namespace minherm {

/// Recipe for a minimal matrix: spectral radius lambda attached to the
/// positive/negative weight slots of a majorization instance, plus middle
/// eigenvalues (one per zero slot) strictly inside (-lambda, lambda).
class ConstructionSpec {
 public:
  /// Throws InvariantViolated when lambda <= 0, middles.size() != inst.zeros(),
  /// or some |middle| >= lambda * (1 - 1e-12).
  static ConstructionSpec create(double lambda, MajorizationInstance inst, RealVector middles);

  double lambda() const { return lambda_; }
  const MajorizationInstance& instance() const { return inst_; }
  const RealVector& middles() const { return middles_; }
  std::size_t dim() const { return inst_.dim(); }

 private:
  ConstructionSpec(double lambda, MajorizationInstance inst, RealVector middles)
      : lambda_(lambda), inst_(std::move(inst)), middles_(std::move(middles)) {}
  double lambda_;
  MajorizationInstance inst_;
  RealVector middles_;
};

/// What build_minimal actually used, kept so callers (and tests) can rebuild
/// the certificate directly instead of re-solving feasibility.
struct BuildProvenance {
  double lambda = 0.0;
  RealVector positive_weights;
  RealVector negative_weights;
  RealVector middles;
  RealVector assigned_eigenvalues;  // per column of `orthogonal`
  RealMatrix orthogonal;            // eigenvector columns
  std::uint64_t seed = 0;
};

struct BuildResult {
  HermitianMatrix matrix;
  BuildProvenance provenance;
};

/// Builds a minimal matrix with operator norm lambda: the zero-diagonal
/// orthogonal frame of the majorization instance supplies eigenvectors, the
/// first r columns get +lambda, the zero columns get the middles (in order),
/// the last s columns get -lambda. The seed is recorded in the provenance
/// (the construction itself is deterministic).
BuildResult build_minimal(const ConstructionSpec& spec, std::uint64_t seed = 0);

/// Builds lambda * P_S1 - lambda * P_S2 + R from a companion pair
/// (S1 = range(P1), S2 = range(P2)); minimal with norm lambda whenever the
/// preconditions hold. Throws PreconditionViolated naming the failed
/// condition: companion-pair check, range orthogonality, P_S R = 0, or the
/// strict bound ||R|| < lambda.
HermitianMatrix build_from_companions(const HermitianMatrix& p1, const HermitianMatrix& p2,
                                      double lambda, const HermitianMatrix& remainder);

}  // namespace minherm

#endif  // MINHERM_CONSTRUCT_HPP
