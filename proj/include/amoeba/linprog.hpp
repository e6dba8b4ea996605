#ifndef AMOEBA_LINPROG_HPP
#define AMOEBA_LINPROG_HPP

#include <vector>

namespace amoeba {

enum class SimplexStatus { Optimal, Infeasible, Unbounded, NumericalFailure };

struct SimplexResult {
  SimplexStatus status = SimplexStatus::NumericalFailure;
  std::vector<double> x;
  double objective = 0.0;
};

/// Solves min c.x subject to A x = b, x >= 0 with the dense two-phase simplex
/// method (Bland's rule, so no cycling). Rows with negative b are negated
/// internally. Sizes: A is m x n, b has m entries, c has n entries.
SimplexResult simplex_solve(const std::vector<std::vector<double>>& A,
                            const std::vector<double>& b,
                            const std::vector<double>& c,
                            int max_iter = 20000);

/// Is p a convex combination of pts? Phase-1 feasibility in the weights.
bool in_convex_hull(const std::vector<double>& p,
                    const std::vector<std::vector<double>>& pts,
                    double tol = 1e-9);

}  // namespace amoeba

#endif
