#ifndef MINHERM_SIMPLEX_HPP
#define MINHERM_SIMPLEX_HPP

#include <vector>

namespace minherm {

/// Result of a phase-I feasibility solve for {x >= 0 : A x = b}.
struct LpFeasibility {
  bool feasible = false;
  std::vector<double> x;               // defined when feasible
  double artificial_objective = 0.0;   // phase-I optimum (0 iff feasible)
  int pivots = 0;
};

/// Phase-I simplex with Bland's rule on a dense tableau. Intended for the
/// tiny systems this library produces (at most a few dozen rows/columns);
/// Bland's rule guarantees termination on degenerate instances.
LpFeasibility solve_equality_feasibility(const std::vector<std::vector<double>>& rows,
                                         const std::vector<double>& rhs);

}  // namespace minherm

#endif  // MINHERM_SIMPLEX_HPP
