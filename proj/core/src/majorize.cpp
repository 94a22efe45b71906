#include "minherm/majorize.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace minherm {

bool majorizes(const RealVector& x, const RealVector& y) {
  if (x.size() != y.size()) throw DimensionMismatch("majorizes: vectors must have equal length");
  RealVector xs = x, ys = y;
  std::sort(xs.begin(), xs.end(), std::greater<>());
  std::sort(ys.begin(), ys.end(), std::greater<>());

  double scale = 0.0;
  for (double v : xs) scale += std::abs(v);
  for (double v : ys) scale += std::abs(v);
  const double tol = 1e-12 * std::max(1.0, scale);

  double px = 0.0, py = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    px += xs[k];
    py += ys[k];
    if (px > py + tol) return false;
  }
  return std::abs(px - py) <= tol;
}

MajorizationInstance MajorizationInstance::create(RealVector positive, RealVector negative,
                                                  std::size_t zeros) {
  if (positive.empty() || negative.empty()) {
    throw InvariantViolated("majorization instance needs at least one positive and one negative weight");
  }
  for (double v : positive) {
    if (!(v > 0.0) || !std::isfinite(v)) throw InvariantViolated("positive weights must be finite and > 0");
  }
  for (double v : negative) {
    if (!(v > 0.0) || !std::isfinite(v)) throw InvariantViolated("negative-side weights must be finite and > 0");
  }
  std::sort(positive.begin(), positive.end(), std::greater<>());
  std::sort(negative.begin(), negative.end(), std::greater<>());

  double sum_a = 0.0, sum_x = 0.0;
  for (double v : positive) sum_a += v;
  for (double v : negative) sum_x += v;
  if (std::abs(sum_a - sum_x) > 1e-12 * sum_a) {
    std::ostringstream msg;
    msg << "weight sums disagree: " << sum_a << " vs " << sum_x;
    throw InvariantViolated(msg.str());
  }

  MajorizationInstance inst;
  inst.a_ = std::move(positive);
  inst.x_ = std::move(negative);
  inst.zeros_ = zeros;
  return inst;
}

RealVector MajorizationInstance::spectrum() const {
  RealVector s;
  s.reserve(dim());
  s.insert(s.end(), a_.begin(), a_.end());
  s.insert(s.end(), zeros_, 0.0);
  for (double v : x_) s.push_back(-v);
  return s;
}

namespace {

// Applies the Givens rotation R = [[c, -s], [s, c]] in the (p,q) plane as
// A <- R^T A R, preserving symmetry; then A_pp = c^2 a_pp + 2 c s a_pq + s^2 a_qq.
void apply_rotation(RealMatrix& a, RealMatrix& u, std::size_t p, std::size_t q, double c, double s) {
  const std::size_t n = a.dim();
  const double app = a(p, p), aqq = a(q, q), apq = a(p, q);
  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const double akp = a(k, p), akq = a(k, q);
    a(k, p) = c * akp + s * akq;
    a(k, q) = -s * akp + c * akq;
    a(p, k) = a(k, p);
    a(q, k) = a(k, q);
  }
  a(p, p) = c * c * app + 2.0 * c * s * apq + s * s * aqq;
  a(q, q) = s * s * app - 2.0 * c * s * apq + c * c * aqq;
  a(p, q) = (c * c - s * s) * apq + c * s * (aqq - app);
  a(q, p) = a(p, q);

  for (std::size_t k = 0; k < n; ++k) {
    const double ukp = u(k, p), ukq = u(k, q);
    u(k, p) = c * ukp + s * ukq;
    u(k, q) = -s * ukp + c * ukq;
  }
}

}  // namespace

UnistochasticResult schur_horn_zero_diag(const MajorizationInstance& inst) {
  const RealVector spectrum = inst.spectrum();
  const std::size_t n = spectrum.size();

  double inf_norm = 0.0, total = 0.0;
  for (double v : spectrum) {
    inf_norm = std::max(inf_norm, std::abs(v));
    total += v;
  }
  if (std::abs(total) > 1e-12 * std::max(1.0, inf_norm)) {
    throw InvariantViolated("spectrum does not sum to zero");
  }

  RealMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = spectrum[i];
  RealMatrix u = RealMatrix::identity(n);

  const double eps = 1e-13 * std::max(1.0, inf_norm);
  // Each pass annihilates the largest positive diagonal entry by rotating it
  // against the most negative one; the pair's trace lands on the negative
  // slot, so the number of nonzero diagonal entries drops every step.
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t p = n, q = n;
    double best_pos = eps, best_neg = -eps;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = a(i, i);
      if (d > best_pos) {
        best_pos = d;
        p = i;
      }
      if (d < best_neg) {
        best_neg = d;
        q = i;
      }
    }
    if (p == n || q == n) break;

    // Solve (R^T A R)_pp = 0 for t = s/c on the 2x2 block [[alpha, b], [b, gamma]]:
    // gamma t^2 + 2 b t + alpha = 0; take the root of smaller magnitude.
    const double alpha = a(p, p), gamma = a(q, q), b = a(p, q);
    const double disc = std::sqrt(b * b - alpha * gamma);
    const double r1 = (-b + disc) / gamma;
    const double r2 = (-b - disc) / gamma;
    const double t = std::abs(r1) <= std::abs(r2) ? r1 : r2;
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    apply_rotation(a, u, p, q, c, s);
    a(p, p) = 0.0;  // annihilated in exact arithmetic; clamp the roundoff
  }

  // The sweeps compute A_final = W^T diag W with W the accumulated rotation
  // product; the eigenvector-per-column convention wants U with
  // U diag U^T = A_final, i.e. U = W^T.
  UnistochasticResult out;
  out.orthogonal = u.transpose();
  out.doubly_stochastic = unistochastic_image(out.orthogonal);
  return out;
}

namespace {

double orthonormality_defect(const ComplexMatrix& u) {
  const std::size_t n = u.dim();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex g = 0.0;
      for (std::size_t k = 0; k < n; ++k) g += std::conj(u(k, i)) * u(k, j);
      if (i == j) g -= 1.0;
      s += std::norm(g);
    }
  }
  return std::sqrt(s);
}

}  // namespace

RealMatrix unistochastic_image(const ComplexMatrix& u) {
  if (orthonormality_defect(u) > 1e-10) {
    throw NotUnitary("unistochastic_image: columns are not orthonormal to 1e-10");
  }
  const std::size_t n = u.dim();
  RealMatrix b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = std::norm(u(i, j));
  return b;
}

RealMatrix unistochastic_image(const RealMatrix& u) { return unistochastic_image(u.to_complex()); }

}  // namespace minherm
