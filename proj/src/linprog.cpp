#include "amoeba/linprog.hpp"

#include <cmath>
#include <cstddef>

#include "amoeba/errors.hpp"

namespace amoeba {

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kFeasTol = 1e-7;

// Dense tableau state: T is m x (ncols+1) with the rhs in the last column and
// the basis columns kept as an identity. basis[i] names the basic variable of
// row i. Costs are looked up in cost[], reduced costs recomputed from scratch
// every iteration (small systems; robustness over speed).
struct Tableau {
  std::vector<std::vector<double>> T;
  std::vector<int> basis;
  std::size_t rows = 0, cols = 0;  // cols excludes the rhs column

  double rhs(std::size_t i) const { return T[i][cols]; }

  void pivot(std::size_t pr, std::size_t pc) {
    const double p = T[pr][pc];
    for (std::size_t j = 0; j <= cols; ++j) T[pr][j] /= p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pr) continue;
      const double f = T[i][pc];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= cols; ++j) T[i][j] -= f * T[pr][j];
    }
    basis[pr] = static_cast<int>(pc);
  }
};

// Bland's rule iteration on the given cost vector over active columns
// [0, active). Returns Optimal/Unbounded/NumericalFailure.
SimplexStatus iterate(Tableau& t, const std::vector<double>& cost, std::size_t active,
                      int& iter_budget) {
  while (true) {
    if (--iter_budget < 0) return SimplexStatus::NumericalFailure;

    // Reduced costs rc_j = c_j - sum_i c_{basis[i]} T[i][j];
    // entering column = smallest index with negative reduced cost (Bland).
    std::ptrdiff_t enter = -1;
    for (std::size_t j = 0; j < active; ++j) {
      double rc = cost[j];
      for (std::size_t i = 0; i < t.rows; ++i)
        rc -= cost[static_cast<std::size_t>(t.basis[i])] * t.T[i][j];
      if (rc < -kPivotTol) {
        enter = static_cast<std::ptrdiff_t>(j);
        break;
      }
    }
    if (enter < 0) return SimplexStatus::Optimal;

    // Ratio test; Bland tie-break on the leaving basic variable's index.
    std::ptrdiff_t leave = -1;
    double best = 0.0;
    for (std::size_t i = 0; i < t.rows; ++i) {
      const double a = t.T[i][static_cast<std::size_t>(enter)];
      if (a > kPivotTol) {
        const double ratio = t.rhs(i) / a;
        if (leave < 0 || ratio < best - 1e-12 ||
            (ratio < best + 1e-12 && t.basis[i] < t.basis[static_cast<std::size_t>(leave)])) {
          leave = static_cast<std::ptrdiff_t>(i);
          best = ratio;
        }
      }
    }
    if (leave < 0) return SimplexStatus::Unbounded;
    t.pivot(static_cast<std::size_t>(leave), static_cast<std::size_t>(enter));
  }
}

}  // namespace

SimplexResult simplex_solve(const std::vector<std::vector<double>>& A,
                            const std::vector<double>& b,
                            const std::vector<double>& c,
                            int max_iter) {
  const std::size_t m = A.size();
  const std::size_t n = m ? A[0].size() : c.size();
  for (const auto& row : A)
    if (row.size() != n) throw input_error("simplex: ragged constraint matrix");
  if (b.size() != m || c.size() != n) throw input_error("simplex: size mismatch");

  SimplexResult res;
  if (m == 0) {  // no constraints: x = 0 is optimal for c >= 0, else unbounded
    for (double cj : c)
      if (cj < -kPivotTol) {
        res.status = SimplexStatus::Unbounded;
        return res;
      }
    res.status = SimplexStatus::Optimal;
    res.x.assign(n, 0.0);
    return res;
  }

  Tableau t;
  t.rows = m;
  t.cols = n + m;  // original vars + one artificial per row
  t.T.assign(m, std::vector<double>(t.cols + 1, 0.0));
  t.basis.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    const double s = b[i] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) t.T[i][j] = s * A[i][j];
    t.T[i][n + i] = 1.0;
    t.T[i][t.cols] = s * b[i];
    t.basis[i] = static_cast<int>(n + i);
  }

  int budget = max_iter;

  // Phase 1: minimize the artificial sum.
  std::vector<double> cost1(t.cols, 0.0);
  for (std::size_t j = n; j < t.cols; ++j) cost1[j] = 1.0;
  SimplexStatus st = iterate(t, cost1, t.cols, budget);
  if (st != SimplexStatus::Optimal) {
    res.status = st == SimplexStatus::Unbounded ? SimplexStatus::NumericalFailure : st;
    return res;
  }
  double art_sum = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    if (t.basis[i] >= static_cast<int>(n)) art_sum += t.rhs(i);
  if (art_sum > kFeasTol) {
    res.status = SimplexStatus::Infeasible;
    return res;
  }

  // Drive any zero-level artificials out of the basis where possible.
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] < static_cast<int>(n)) continue;
    std::ptrdiff_t col = -1;
    for (std::size_t j = 0; j < n; ++j)
      if (std::fabs(t.T[i][j]) > kPivotTol) {
        col = static_cast<std::ptrdiff_t>(j);
        break;
      }
    if (col >= 0) t.pivot(i, static_cast<std::size_t>(col));
    // else: redundant row; the artificial stays basic at value ~0, harmless
    // in phase 2 because its cost below is large.
  }

  // Phase 2 over the original columns only (active = n keeps artificials out;
  // a leftover basic artificial from a redundant row sits at level ~0 with
  // zero cost and never wins a ratio test).
  std::vector<double> cost2(t.cols, 0.0);
  for (std::size_t j = 0; j < n; ++j) cost2[j] = c[j];
  st = iterate(t, cost2, n, budget);
  if (st != SimplexStatus::Optimal) {
    res.status = st;
    return res;
  }

  res.status = SimplexStatus::Optimal;
  res.x.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    if (t.basis[i] < static_cast<int>(n)) res.x[static_cast<std::size_t>(t.basis[i])] = t.rhs(i);
  res.objective = 0.0;
  for (std::size_t j = 0; j < n; ++j) res.objective += c[j] * res.x[j];
  return res;
}

bool in_convex_hull(const std::vector<double>& p,
                    const std::vector<std::vector<double>>& pts,
                    double tol) {
  if (pts.empty()) return false;
  const std::size_t d = p.size();
  const std::size_t k = pts.size();

  // Row scaling keeps the tableau conditioned when coordinates are large.
  std::vector<std::vector<double>> A(d + 1, std::vector<double>(k, 0.0));
  std::vector<double> b(d + 1, 0.0);
  for (std::size_t j = 0; j < k; ++j) A[0][j] = 1.0;
  b[0] = 1.0;
  for (std::size_t i = 0; i < d; ++i) {
    double scale = 1.0;
    for (std::size_t j = 0; j < k; ++j) scale = std::max(scale, std::fabs(pts[j][i]));
    scale = std::max(scale, std::fabs(p[i]));
    for (std::size_t j = 0; j < k; ++j) A[i + 1][j] = pts[j][i] / scale;
    b[i + 1] = p[i] / scale;
  }

  SimplexResult r = simplex_solve(A, b, std::vector<double>(k, 0.0));
  if (r.status == SimplexStatus::Infeasible) return false;
  if (r.status != SimplexStatus::Optimal) throw numeric_error("convex hull LP failed");

  // Re-verify the combination within tol.
  for (std::size_t i = 0; i < d; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < k; ++j) s += r.x[j] * pts[j][i];
    if (std::fabs(s - p[i]) > tol * (1.0 + std::fabs(p[i]))) return false;
  }
  return true;
}

}  // namespace amoeba
