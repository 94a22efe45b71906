#include "minherm/oracle.hpp"

#include <cmath>

#include "minherm/eigen.hpp"
#include "minherm/rng.hpp"

namespace minherm {

namespace {

struct Objective {
  double value = 0.0;
  RealVector subgradient;
};

// f(D) = max(lambda_max, -lambda_min) of M + diag(D). The subgradient is the
// profile of the attaining extreme eigenvector; for a degenerate extreme
// cluster the cluster-averaged profile is used (any member profile is a
// valid subgradient, the average is more stable).
Objective evaluate(const HermitianMatrix& m, const DiagonalVector& d) {
  ComplexMatrix shifted = m.matrix();
  for (std::size_t i = 0; i < m.dim(); ++i) shifted(i, i) += d[i];
  const SpectralDecomposition dec = eigh(HermitianMatrix::symmetrized(shifted));

  const double top = dec.eigenvalues.front();
  const double bottom = dec.eigenvalues.back();
  const bool top_branch = top >= -bottom;
  const double extreme = top_branch ? top : bottom;

  Objective obj;
  obj.value = std::abs(extreme);
  obj.subgradient.assign(m.dim(), 0.0);
  const double cluster_eps = 1e-9 * std::max(1.0, obj.value);
  std::size_t count = 0;
  for (std::size_t k = 0; k < dec.dim(); ++k) {
    if (std::abs(dec.eigenvalues[k] - extreme) > cluster_eps) continue;
    const RealVector prof = abs_profile(dec.eigenvector(k));
    for (std::size_t i = 0; i < m.dim(); ++i) obj.subgradient[i] += prof[i];
    ++count;
  }
  const double sign = top_branch ? 1.0 : -1.0;
  for (double& g : obj.subgradient) g *= sign / static_cast<double>(count);
  return obj;
}

struct StartResult {
  double best = 0.0;
  DiagonalVector minimizer;
  int iterations = 0;
  bool converged = false;
};

StartResult run_start(const HermitianMatrix& m, DiagonalVector d, const DistanceOptions& opts) {
  StartResult out;
  Objective obj = evaluate(m, d);
  out.best = obj.value;
  out.minimizer = d;

  const double delta_floor = 0.25 * opts.tol;
  double delta = std::max(0.2 * obj.value, 4.0 * delta_floor);
  int since_improvement = 0;
  constexpr int kStallWindow = 60;

  for (int it = 0; it < opts.max_iterations; ++it) {
    ++out.iterations;

    double g2 = 0.0;
    for (double g : obj.subgradient) g2 += g * g;
    if (g2 <= 1e-300) {
      out.converged = true;  // zero subgradient: exact minimizer
      break;
    }

    // Polyak step toward the level f_best - delta.
    const double step = (obj.value - (out.best - delta)) / g2;
    if (step > 0.0) {
      for (std::size_t i = 0; i < d.size(); ++i) d[i] -= step * obj.subgradient[i];
    }

    obj = evaluate(m, d);
    if (obj.value < out.best - 1e-16) {
      if (out.best - obj.value > 0.05 * delta) since_improvement = 0;
      out.best = obj.value;
      out.minimizer = d;
    } else {
      ++since_improvement;
    }
    if (since_improvement >= kStallWindow) {
      since_improvement = 0;
      delta *= 0.5;
      if (delta < delta_floor) {
        out.converged = true;
        break;
      }
    }
  }
  return out;
}

}  // namespace

DistanceResult distance_to_diagonals(const HermitianMatrix& m, const DistanceOptions& opts) {
  const std::size_t n = m.dim();
  const double scale = std::max(1e-3, operator_norm(m));

  DistanceResult result;
  result.starts = std::max(1, opts.starts);
  result.minimizer.assign(n, 0.0);
  result.distance = evaluate(m, result.minimizer).value;  // D = 0 upper bound ||M||

  // Canonical upper bound ||M - diag(M)||: keeps the invariant
  // distance <= ||M + D|| for D = -diag(M) exact, not just approximate.
  DiagonalVector negdiag(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) negdiag[i] = -m(i, i).real();
  {
    const double f = evaluate(m, negdiag).value;
    if (f < result.distance) {
      result.distance = f;
      result.minimizer = negdiag;
    }
  }

  for (int s = 0; s < result.starts; ++s) {
    DiagonalVector d(n, 0.0);
    if (s == 1) {
      d = negdiag;
    } else if (s > 1) {
      Rng rng(Rng::derive_seed(opts.seed, static_cast<std::uint64_t>(s)));
      for (double& v : d) v = scale * rng.gaussian();
    }
    const StartResult sr = run_start(m, d, opts);
    result.iterations += sr.iterations;
    if (!sr.converged) result.converged = false;
    if (sr.best < result.distance) {
      result.distance = sr.best;
      result.minimizer = sr.minimizer;
    }
  }
  return result;
}

bool is_minimal_by_oracle(const HermitianMatrix& m, double tol, const DistanceOptions& opts) {
  const DistanceResult r = distance_to_diagonals(m, opts);
  return std::abs(r.distance - operator_norm(m)) <= tol;
}

}  // namespace minherm
