#ifndef MINHERM_MATRIX_IO_HPP
#define MINHERM_MATRIX_IO_HPP

#include <string>

#include "minherm/matrix.hpp"

namespace minherm {

// Matrix file format (JSON, the contract for every CLI command):
//   {"n": <int>, "entries": [[[re,im], ...n], ...n]}   entries row-major
// Real vector files:
//   {"values": [..]}
// Unknown top-level keys are ignored on read, so files produced with extra
// metadata (e.g. construction provenance) still parse as matrices.

HermitianMatrix read_matrix(const std::string& path);
void write_matrix(const std::string& path, const HermitianMatrix& m);

/// Parse/serialize the matrix format from an in-memory JSON string.
HermitianMatrix matrix_from_json(const std::string& text);
std::string matrix_to_json(const HermitianMatrix& m);

RealVector read_real_vector(const std::string& path);
void write_real_vector(const std::string& path, const RealVector& v);

}  // namespace minherm

#endif  // MINHERM_MATRIX_IO_HPP
