#include "minherm/simplex.hpp"

#include <cmath>
#include <cstddef>
#include <limits>

#include "minherm/errors.hpp"

namespace minherm {

namespace {
constexpr double kPivotEps = 1e-11;
}

LpFeasibility solve_equality_feasibility(const std::vector<std::vector<double>>& rows,
                                         const std::vector<double>& rhs) {
  const std::size_t m = rows.size();
  if (rhs.size() != m) throw DimensionMismatch("simplex: rhs size does not match row count");
  const std::size_t k = m == 0 ? 0 : rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != k) throw DimensionMismatch("simplex: ragged constraint matrix");
  }

  LpFeasibility out;
  if (m == 0) {
    out.feasible = true;
    out.x.assign(k, 0.0);
    return out;
  }

  // Tableau [A | I | b] with rhs made nonnegative; basis starts as the
  // artificial identity block. Phase-I objective row is the sum of all
  // constraint rows over the structural columns.
  const std::size_t width = k + m + 1;
  std::vector<std::vector<double>> t(m, std::vector<double>(width, 0.0));
  double scale = 1.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double sign = rhs[i] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < k; ++j) {
      t[i][j] = sign * rows[i][j];
      scale = std::max(scale, std::abs(t[i][j]));
    }
    t[i][k + i] = 1.0;
    t[i][width - 1] = sign * rhs[i];
    scale = std::max(scale, std::abs(rhs[i]));
  }
  const double eps = kPivotEps * scale;

  std::vector<double> z(width, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) z[j] += t[i][j];
    z[width - 1] += t[i][width - 1];
  }

  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = k + i;

  auto pivot = [&](std::size_t row, std::size_t col) {
    const double p = t[row][col];
    for (double& v : t[row]) v /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row) continue;
      const double f = t[i][col];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[row][j];
      t[i][col] = 0.0;
    }
    const double fz = z[col];
    if (fz != 0.0) {
      for (std::size_t j = 0; j < width; ++j) z[j] -= fz * t[row][j];
      z[col] = 0.0;
    }
    basis[row] = col;
    ++out.pivots;
  };

  // Bland's rule: entering = lowest-index column with positive reduced cost,
  // leaving = min ratio with ties broken by lowest basis variable index.
  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < k + m; ++j) {
      if (z[j] > eps) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = m;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] > eps) {
        const double ratio = t[i][width - 1] / t[i][enter];
        if (ratio < best_ratio - 1e-15 ||
            (ratio <= best_ratio + 1e-15 && (leave == m || basis[i] < basis[leave]))) {
          best_ratio = ratio;
          leave = i;
        }
      }
    }
    if (leave == m) break;  // cannot happen for phase I (objective bounded below)
    pivot(leave, enter);
  }

  out.artificial_objective = z[width - 1];
  if (out.artificial_objective > 1e-9 * scale) {
    out.feasible = false;
    return out;
  }

  // Drive any remaining zero-level artificials out of the basis so the
  // structural solution can be read off; rows with no structural pivot are
  // redundant constraints.
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < k) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (std::abs(t[i][j]) > eps) {
        pivot(i, j);
        break;
      }
    }
  }

  out.feasible = true;
  out.x.assign(k, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < k) out.x[basis[i]] = std::max(0.0, t[i][width - 1]);
  }
  return out;
}

}  // namespace minherm
