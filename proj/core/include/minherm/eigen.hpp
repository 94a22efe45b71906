#ifndef MINHERM_EIGEN_HPP
#define MINHERM_EIGEN_HPP

#include <cstddef>
#include <vector>

#include "minherm/matrix.hpp"

namespace minherm {

/// Eigenvalues in descending order plus a unitary matrix whose column k is a
/// unit eigenvector for eigenvalues[k]. Deterministic: ties in the ordering
/// are broken by original column index, and each eigenvector's phase is fixed
/// by making its largest-modulus component real positive.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  std::size_t dim() const { return eigenvalues.size(); }
  ComplexVector eigenvector(std::size_t k) const { return eigenvectors.column(k); }
};

/// A group of eigenvalue indices treated as one multiple eigenvalue.
struct EigCluster {
  double value;                       // representative (mean of members)
  std::vector<std::size_t> columns;   // indices into the decomposition
  std::size_t multiplicity() const { return columns.size(); }
};

/// Cyclic-by-rows complex Jacobi. Throws NoConvergence if the off-diagonal
/// Frobenius mass fails to drop below 1e-13 * ||M||_F within 100 sweeps.
SpectralDecomposition eigh(const HermitianMatrix& m);

/// max |eigenvalue|.
double operator_norm(const HermitianMatrix& m);

/// Partition eigenvalue indices into clusters. Within a cluster the spread is
/// <= tol; distinct clusters are separated by > tol. Throws
/// AmbiguousClustering when a gap falls in [tol/2, 2*tol] (or when chained
/// small gaps make any valid partition impossible); callers must adjust tol.
std::vector<EigCluster> cluster(const SpectralDecomposition& dec, double tol);

/// 1e-8 * max(1, ||M||) given the already-computed spectrum.
double default_cluster_tol(const SpectralDecomposition& dec);

/// Orthogonal projection onto the eigenspace of the cluster whose
/// representative is within tol of target. Throws NoSuchEigenvalue.
HermitianMatrix spectral_projection(const SpectralDecomposition& dec, double target, double tol);

}  // namespace minherm

#endif  // MINHERM_EIGEN_HPP
