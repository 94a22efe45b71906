#ifndef MINHERM_MAJORIZE_HPP
#define MINHERM_MAJORIZE_HPP

#include <cstddef>
#include <vector>

#include "minherm/matrix.hpp"

namespace minherm {

/// True iff x is majorized by y (x ≺ y): sorted-descending partial sums of x
/// bounded by those of y, with equal totals (1e-12 relative tolerance).
/// Throws DimensionMismatch on unequal lengths.
bool majorizes(const RealVector& x, const RealVector& y);

/// Majorization data for the zero-diagonal construction: positive weights a
/// (descending), positive weights x with sum(a) == sum(x), and a count of
/// interleaved zeros. The assembled spectrum (a_1..a_r, 0...0, -x_1..-x_s)
/// majorizes the zero vector, which is what makes a zero-diagonal orthogonal
/// conjugation possible.
class MajorizationInstance {
 public:
  /// Validates and canonicalizes (both weight lists sorted descending).
  /// Throws InvariantViolated when a weight is not positive or the sums
  /// disagree beyond 1e-12 relative.
  static MajorizationInstance create(RealVector positive, RealVector negative, std::size_t zeros);

  const RealVector& positive_part() const { return a_; }
  const RealVector& negative_part() const { return x_; }
  std::size_t zeros() const { return zeros_; }
  std::size_t dim() const { return a_.size() + zeros_ + x_.size(); }

  /// The prescribed spectrum (a_1..a_r, 0...0, -x_1..-x_s).
  RealVector spectrum() const;

 private:
  MajorizationInstance() = default;
  RealVector a_;
  RealVector x_;
  std::size_t zeros_ = 0;
};

/// Real orthogonal U together with its unistochastic image B = U∘U.
struct UnistochasticResult {
  RealMatrix orthogonal;         // U with U diag(spectrum) U^T zero-diagonal
  RealMatrix doubly_stochastic;  // B_ij = U_ij^2
};

/// Finds a real orthogonal U such that A = U diag(spectrum) U^T has zero
/// diagonal, by chained 2x2 Givens rotations: each step pairs the largest
/// positive diagonal entry with the most negative one and annihilates the
/// positive entry, so at most n-1 rotations are needed. Column k of U is an
/// eigenvector of A for spectrum[k].
UnistochasticResult schur_horn_zero_diag(const MajorizationInstance& inst);

/// Entrywise squared moduli of a unitary; rows and columns sum to 1.
/// Throws NotUnitary when the columns are not orthonormal to 1e-10.
RealMatrix unistochastic_image(const ComplexMatrix& u);
RealMatrix unistochastic_image(const RealMatrix& u);

}  // namespace minherm

#endif  // MINHERM_MAJORIZE_HPP
