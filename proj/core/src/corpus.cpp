#include "minherm/corpus.hpp"

#include <cmath>

namespace minherm {

namespace {

HermitianMatrix reference_4x4_matrix() {
  const Complex i(0.0, 1.0);
  const ComplexMatrix m = ComplexMatrix::from_rows({
      {9.0 / 14.0, -15.0 / 14.0 - i / 7.0, -1.0 / 7.0 + 5.0 * i / 7.0, 2.0 / 7.0 + 6.0 * i / 7.0},
      {-15.0 / 14.0 + i / 7.0, 13.0 / 14.0, -1.0 / 7.0 + i, 6.0 * i / 7.0},
      {-1.0 / 7.0 - 5.0 * i / 7.0, -1.0 / 7.0 - i, 5.0 / 7.0, -1.0 - 2.0 * i / 7.0},
      {2.0 / 7.0 - 6.0 * i / 7.0, -6.0 * i / 7.0, -1.0 + 2.0 * i / 7.0, 5.0 / 7.0},
  });
  return hermitian_from_entries(m);
}

HermitianMatrix minimal_2x2() {
  return hermitian_from_entries(ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}));
}

HermitianMatrix diag_counterexample() {
  return hermitian_from_entries(ComplexMatrix::from_rows({{1.0, 0.0, 0.0}, {0.0, 2.0, 0.0}, {0.0, 0.0, 3.0}}));
}

HermitianMatrix fourier_conjugated_diag(double d0, double d1, double d2) {
  const ComplexMatrix u = fourier_unitary_3();
  const double d[3] = {d0, d1, d2};
  ComplexMatrix m(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < 3; ++k) acc += d[k] * u(i, k) * std::conj(u(j, k));
      m(i, j) = acc;
    }
  return HermitianMatrix::symmetrized(m);
}

}  // namespace

ComplexMatrix fourier_unitary_3() {
  const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
  const Complex omega(-0.5, 0.5 * std::sqrt(3.0));  // exp(2*pi*i/3)
  ComplexMatrix u(3);
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t k = 0; k < 3; ++k) {
      Complex w = 1.0;
      for (std::size_t e = 0; e < (j * k) % 3; ++e) w *= omega;
      u(j, k) = inv_sqrt3 * w;
    }
  }
  return u;
}

HermitianMatrix hadamard_3x3_p() { return fourier_conjugated_diag(4.0, 0.0, 0.0); }

HermitianMatrix hadamard_3x3_q(double t) { return fourier_conjugated_diag(0.0, 4.0 - t, t); }

const Reference4x4& reference_4x4() {
  static const Reference4x4 data = [] {
    Reference4x4 r;
    r.matrix = reference_4x4_matrix();
    const Complex i(0.0, 1.0);
    const double c1 = 1.0 / (5.0 * std::sqrt(2.0));
    r.top_eigenvector_1 = {c1 * (-1.0 - 2.0 * i), c1 * 5.0, c1 * (-3.0 - i), c1 * (1.0 - 3.0 * i)};
    const double c2 = 1.0 / (10.0 * std::sqrt(14.0));
    r.top_eigenvector_2 = {c2 * (17.0 - 11.0 * i), c2 * (-15.0 + 5.0 * i), c2 * (-9.0 + 17.0 * i),
                           c2 * (3.0 - 19.0 * i)};
    const double cw = 1.0 / (2.0 * std::sqrt(2.0));
    r.bottom_eigenvector = {cw * (1.0 - i), cw * (1.0 - i), cw * (1.0 + i), cw * (1.0 + i)};
    return r;
  }();
  return data;
}

const std::vector<CorpusEntry>& example_corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> v;
    v.push_back({"minimal-4x4", reference_4x4().matrix});
    v.push_back({"minimal-2x2", minimal_2x2()});
    v.push_back({"diag-counterexample", diag_counterexample()});
    v.push_back({"hadamard-3x3-P", hadamard_3x3_p()});
    for (int t = 0; t <= 4; ++t) {
      v.push_back({"hadamard-3x3-Q" + std::to_string(t), hadamard_3x3_q(static_cast<double>(t))});
    }
    return v;
  }();
  return entries;
}

}  // namespace minherm
