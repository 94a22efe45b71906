#ifndef MINHERM_TESTS_HELPERS_HPP
#define MINHERM_TESTS_HELPERS_HPP

// Test-only utilities. The closed-form eigenvalue routines and the grid
// distance oracle are deliberately independent of the library's Jacobi and
// subgradient code paths: they exist to cross-check those paths.

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "minherm/construct.hpp"
#include "minherm/matrix.hpp"
#include "minherm/rng.hpp"

namespace minherm::testing {

inline HermitianMatrix random_hermitian(std::size_t n, Rng& rng, double scale = 1.0) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = Complex(scale * rng.uniform(-1.0, 1.0), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex z(scale * rng.uniform(-1.0, 1.0), scale * rng.uniform(-1.0, 1.0));
      m(i, j) = z;
      m(j, i) = std::conj(z);
    }
  }
  return hermitian_from_entries(m);
}

inline ComplexVector random_unit_vector(std::size_t n, Rng& rng) {
  ComplexVector v(n);
  for (Complex& z : v) z = Complex(rng.gaussian(), rng.gaussian());
  const double s = norm(v);
  for (Complex& z : v) z /= s;
  return v;
}

/// Eigenvalues of a 2x2 Hermitian matrix from the characteristic polynomial
/// (quadratic formula), descending.
inline std::array<double, 2> charpoly_eigenvalues_2(const HermitianMatrix& m) {
  const double a = m(0, 0).real();
  const double c = m(1, 1).real();
  const double b2 = std::norm(m(0, 1));
  const double mid = 0.5 * (a + c);
  const double rad = std::sqrt(0.25 * (a - c) * (a - c) + b2);
  return {mid + rad, mid - rad};
}

/// Eigenvalues of a 3x3 Hermitian matrix: trigonometric solution of the
/// (depressed) characteristic cubic, which has three real roots. Descending.
inline std::array<double, 3> charpoly_eigenvalues_3(const HermitianMatrix& m) {
  const double tr = m(0, 0).real() + m(1, 1).real() + m(2, 2).real();
  // Sum of principal 2x2 minors.
  auto minor = [&](std::size_t i, std::size_t j) {
    return m(i, i).real() * m(j, j).real() - std::norm(m(i, j));
  };
  const double mm = minor(0, 1) + minor(0, 2) + minor(1, 2);
  // det via cofactor expansion.
  const Complex det_c = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                        m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                        m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  const double det = det_c.real();

  // lambda = x + tr/3 turns det(lambda I - M) into x^3 + p x + q.
  const double p = mm - tr * tr / 3.0;
  const double q = -2.0 * tr * tr * tr / 27.0 + tr * mm / 3.0 - det;

  std::array<double, 3> roots{};
  if (p >= -1e-14 * std::max(1.0, tr * tr)) {
    const double x = std::cbrt(-q);
    roots = {x, x, x};
  } else {
    const double rho = 2.0 * std::sqrt(-p / 3.0);
    double arg = 3.0 * q / (p * rho);
    arg = std::clamp(arg, -1.0, 1.0);
    const double theta = std::acos(arg);
    for (int k = 0; k < 3; ++k) {
      roots[static_cast<std::size_t>(k)] =
          rho * std::cos((theta - 2.0 * M_PI * k) / 3.0);
    }
  }
  for (double& r : roots) r += tr / 3.0;
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

/// max |eigenvalue| of M + diag(d) for n in {2,3}, via the closed forms.
inline double shifted_norm_closed_form(const HermitianMatrix& m, const std::vector<double>& d) {
  ComplexMatrix s = m.matrix();
  for (std::size_t i = 0; i < m.dim(); ++i) s(i, i) += d[i];
  const HermitianMatrix h = HermitianMatrix::symmetrized(s);
  if (m.dim() == 2) {
    const auto e = charpoly_eigenvalues_2(h);
    return std::max(std::abs(e[0]), std::abs(e[1]));
  }
  const auto e = charpoly_eigenvalues_3(h);
  return std::max(std::abs(e[0]), std::abs(e[2]));
}

/// Brute-force distance oracle for n in {2,3}: full grid with step 0.1 over
/// [-W, W]^n (W covers every possible minimizer), then two local refinements
/// shrinking the step by 10x each, ending at step 1e-3.
inline double grid_distance(const HermitianMatrix& m) {
  const std::size_t n = m.dim();
  // Any minimizer satisfies |d_i| <= 2 ||M||; a safe overestimate of ||M||
  // is the maximum absolute row sum.
  double row_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += std::abs(m(i, j));
    row_sum = std::max(row_sum, s);
  }
  const double width = 2.0 * row_sum + 0.2;

  std::vector<double> center(n, 0.0);
  std::vector<double> best_d(n, 0.0);
  double best = shifted_norm_closed_form(m, best_d);
  double step = 0.1;
  double half = width;

  for (int level = 0; level < 3; ++level) {
    const int radius = static_cast<int>(std::ceil(half / step));
    std::vector<int> idx(n, -radius);
    std::vector<double> d(n, 0.0);
    while (true) {
      for (std::size_t i = 0; i < n; ++i) d[i] = center[i] + step * idx[i];
      const double f = shifted_norm_closed_form(m, d);
      if (f < best) {
        best = f;
        best_d = d;
      }
      std::size_t pos = 0;
      while (pos < n && ++idx[pos] > radius) {
        idx[pos] = -radius;
        ++pos;
      }
      if (pos == n) break;
    }
    center = best_d;
    half = 1.5 * step;
    step /= 10.0;
  }
  return best;
}

/// Seeded random construction recipe with n in [3, 8].
inline ConstructionSpec random_construction_spec(std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t n = 3 + rng.uniform_index(6);
  const std::size_t r = 1 + rng.uniform_index(n - 1);                  // 1..n-1
  const std::size_t s = 1 + rng.uniform_index(n - r);                  // 1..n-r
  const std::size_t zeros = n - r - s;

  RealVector a(r), x(s);
  double sum_a = 0.0, sum_x = 0.0;
  for (double& v : a) {
    v = rng.uniform(0.3, 2.0);
    sum_a += v;
  }
  for (double& v : x) {
    v = rng.uniform(0.3, 2.0);
    sum_x += v;
  }
  for (double& v : x) v *= sum_a / sum_x;

  const double lambda = rng.uniform(0.5, 3.0);
  RealVector middles(zeros);
  for (double& v : middles) v = lambda * rng.uniform(-0.9, 0.9);

  return ConstructionSpec::create(lambda, MajorizationInstance::create(a, x, zeros), middles);
}

inline double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix d = a;
  d -= b;
  return d.frobenius_norm();
}

}  // namespace minherm::testing

#endif  // MINHERM_TESTS_HELPERS_HPP
