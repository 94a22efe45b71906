#ifndef MINHERM_CORPUS_HPP
#define MINHERM_CORPUS_HPP

#include <string>
#include <vector>

#include "minherm/matrix.hpp"

namespace minherm {

struct CorpusEntry {
  std::string name;
  HermitianMatrix matrix;
};

/// Built-in examples: minimal-4x4 (plus the Hadamard companion family
/// hadamard-3x3-P / hadamard-3x3-Q0..Q4), minimal-2x2, diag-counterexample.
/// Every entry is a valid Hermitian matrix; see the individual accessors for
/// the known spectral data.
const std::vector<CorpusEntry>& example_corpus();

/// A 4x4 minimal matrix with spectrum (2, 2, 1, -2) whose -2 eigenvector
/// profile (1/4, 1/4, 1/4, 1/4) is a strict convex combination (weights 2/9
/// and 7/9) of the two +2 eigenvector profiles but matches no single +2
/// eigenvector. The smallest dimension where that happens: for 3x3 matrices
/// minimality forces matching single-eigenvector profiles.
struct Reference4x4 {
  HermitianMatrix matrix;
  ComplexVector top_eigenvector_1;   // orthonormal eigenvectors of +2
  ComplexVector top_eigenvector_2;
  ComplexVector bottom_eigenvector;  // unit eigenvector of -2
};
const Reference4x4& reference_4x4();

/// Fixed 3x3 complex Hadamard unitary: the Fourier matrix with entries
/// w^{jk}/sqrt(3), w = exp(2*pi*i/3).
ComplexMatrix fourier_unitary_3();

/// P = U diag(4,0,0) U* for the Fourier unitary above.
HermitianMatrix hadamard_3x3_p();

/// Q_t = U diag(0, 4-t, t) U*; a companion of hadamard_3x3_p for every
/// t in [0, 4] (a continuum of distinct companions).
HermitianMatrix hadamard_3x3_q(double t);

}  // namespace minherm

#endif  // MINHERM_CORPUS_HPP
