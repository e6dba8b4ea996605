#include "amoeba/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "amoeba/bounds.hpp"
#include "amoeba/errors.hpp"
#include "amoeba/linprog.hpp"
#include "amoeba/polytope.hpp"
#include "amoeba/resultant.hpp"

namespace amoeba {

namespace {

constexpr double kBox = 1e6;

ExponentVector scaled_index(const ExponentVector& k, long factor) {
  ExponentVector e(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) e[i] = k[i] * factor;
  return e;
}

}  // namespace

std::optional<HalfspaceSystem> component_polyhedron(const LaurentPolynomial& resf,
                                                    const ExponentVector& k, long n,
                                                    const Real& big_d) {
  if (resf.terms.empty()) throw degenerate_error("polyhedron of the zero polynomial");
  if (static_cast<int>(k.size()) != resf.r)
    throw input_error("index dimension does not match variable count");
  if (n < 1) throw input_error("order must be a positive integer");
  if (!(big_d.sign() > 0)) throw input_error("dominance factor must be positive");

  long nr = 1;
  for (int i = 0; i < resf.r; ++i) nr *= n;
  const ExponentVector candidate = scaled_index(k, nr);
  const auto it = resf.terms.find(candidate);
  if (it == resf.terms.end()) return std::nullopt;

  const Real log_bk = log(abs(it->second));
  const Real log_d = log(big_d);

  HalfspaceSystem H;
  H.component_index = k;
  H.n = n;
  for (const auto& [j, b] : resf.terms) {
    if (j == candidate) continue;
    Halfspace h;
    h.normal.resize(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) h.normal[i] = candidate[i] - j[i];
    h.offset = log_bk - log(abs(b)) - log_d;
    H.inequalities.push_back(std::move(h));
  }
  return H;
}

namespace {

// One phase-1 solve of {normal . x + offset >= slack, |x_i| <= kBox}.
// Returns the witness when the solver reports feasible, nullopt on a clean
// infeasibility verdict, and throws on solver failure.
std::optional<std::vector<double>> solve_with_slack(const HalfspaceSystem& H, double slack) {
  const std::size_t r = H.component_index.size();

  // Variables: u, v (x = u - v), one surplus per inequality, one bound slack
  // per u and v entry. Rows: each inequality, then the box rows.
  const std::size_t m = H.inequalities.size();
  const std::size_t cols = 4 * r + m;
  const std::size_t rows = m + 2 * r;
  std::vector<std::vector<double>> A(rows, std::vector<double>(cols, 0.0));
  std::vector<double> b(rows, 0.0);

  for (std::size_t i = 0; i < m; ++i) {
    const auto& h = H.inequalities[i];
    for (std::size_t j = 0; j < r; ++j) {
      const double nj = static_cast<double>(h.normal[j]);
      A[i][j] = nj;
      A[i][r + j] = -nj;
    }
    A[i][2 * r + i] = -1.0;  // surplus
    b[i] = slack - h.offset.to_double();
  }
  for (std::size_t j = 0; j < r; ++j) {
    A[m + j][j] = 1.0;
    A[m + j][2 * r + m + j] = 1.0;
    b[m + j] = kBox;
    A[m + r + j][r + j] = 1.0;
    A[m + r + j][3 * r + m + j] = 1.0;
    b[m + r + j] = kBox;
  }

  const std::vector<double> c(cols, 0.0);
  const SimplexResult lp = simplex_solve(A, b, c);
  switch (lp.status) {
    case SimplexStatus::Optimal: {
      std::vector<double> witness(r);
      for (std::size_t j = 0; j < r; ++j) witness[j] = lp.x[j] - lp.x[r + j];
      return witness;
    }
    case SimplexStatus::Infeasible:
      return std::nullopt;
    default:
      throw numeric_error("feasibility linear program failed numerically");
  }
}

bool witness_clears(const HalfspaceSystem& H, const std::vector<double>& witness) {
  for (const auto& h : H.inequalities) {
    double lhs = h.offset.to_double();
    for (std::size_t j = 0; j < witness.size(); ++j)
      lhs += static_cast<double>(h.normal[j]) * witness[j];
    if (!(lhs > 0.0)) return false;
  }
  return true;
}

}  // namespace

FeasibilityResult lp_feasible(const HalfspaceSystem& H, double strict_slack) {
  if (!(strict_slack > 0.0)) throw input_error("strictness slack must be positive");
  const std::size_t r = H.component_index.size();
  FeasibilityResult res;
  if (H.inequalities.empty()) {
    res.feasible = true;
    res.witness.assign(r, 0.0);
    return res;
  }

  // The solver works at a coarser tolerance than the slack, so a claimed
  // witness must actually clear every strict inequality before it is
  // returned. A phase-1 vertex can sit on the boundary within roundoff even
  // when the region is deep; asking again with a larger slack then lands
  // inside, and any point feasible at a larger slack is feasible here.
  for (int escalation = 0; escalation < 3; ++escalation) {
    const double slack = strict_slack * std::pow(1e3, escalation);
    const auto witness = solve_with_slack(H, slack);
    if (!witness) {
      if (escalation == 0) return res;  // clean infeasibility at the requested slack
      // The requested slack produced an unusable witness and a stricter ask
      // says empty: neither verdict is trustworthy.
      throw numeric_error("feasibility witness failed strictness verification");
    }
    if (witness_clears(H, *witness)) {
      res.feasible = true;
      res.witness = *witness;
      return res;
    }
  }
  throw numeric_error("feasibility witness failed strictness verification");
}

namespace {

std::vector<ComponentEntry> enumerate_core(const LaurentPolynomial& f, const LaurentPolynomial& g,
                                           long n) {
  const auto P = newton_polytope(f);
  const Real d = lattice_count_bound(P, 1);
  long power = 1;
  for (int i = 0; i < f.r * f.r - f.r; ++i) power *= n;
  const Real big_d = d * Real(power);

  std::vector<ComponentEntry> out;
  for (const auto& k : lattice_points_in_dilated_hull(P, 1)) {
    ComponentEntry entry;
    entry.k = k;
    entry.system = component_polyhedron(g, k, n, big_d);
    if (entry.system) {
      const FeasibilityResult fr = lp_feasible(*entry.system);
      entry.feasible = fr.feasible;
      entry.witness = fr.witness;
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace

std::vector<ComponentEntry> enumerate_components(const LaurentPolynomial& f, long n,
                                                 double term_budget) {
  if (f.terms.empty()) throw degenerate_error("component enumeration of the zero polynomial");
  return enumerate_core(f, cyclic_resultant(f, n, term_budget), n);
}

TropicalPolynomial approximate_spine(const LaurentPolynomial& f, long n, double term_budget) {
  if (f.terms.empty()) throw degenerate_error("skeleton of the zero polynomial");
  const LaurentPolynomial g = cyclic_resultant(f, n, term_budget);
  long nr = 1;
  for (int i = 0; i < f.r; ++i) nr *= n;
  const Real inv(Real(1L) / Real(nr));

  TropicalPolynomial T;
  T.r = f.r;
  for (const auto& entry : enumerate_core(f, g, n)) {
    if (!entry.feasible || !entry.system) continue;
    const auto it = g.terms.find(scaled_index(entry.k, nr));
    if (it == g.terms.end()) continue;
    T.terms.emplace(entry.k, inv * log(abs(it->second)));
  }
  if (T.terms.empty())
    throw degenerate_error("no feasible component at this order; skeleton undefined");
  return T;
}

Real tropical_eval(const TropicalPolynomial& T, const std::vector<Real>& x) {
  if (T.terms.empty()) throw input_error("evaluation of an empty max-plus polynomial");
  if (static_cast<int>(x.size()) != T.r)
    throw input_error("point dimension does not match variable count");
  bool first = true;
  Real best;
  for (const auto& [e, c] : T.terms) {
    Real v = c;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (e[i] != 0) v += Real(static_cast<long>(e[i])) * x[i];
    if (first || best < v) {
      best = std::move(v);
      first = false;
    }
  }
  return best;
}

bool spine_membership(const TropicalPolynomial& T, const std::vector<Real>& x,
                      std::optional<Real> tie_tol) {
  if (T.terms.empty()) throw input_error("membership in an empty max-plus polynomial");
  if (static_cast<int>(x.size()) != T.r)
    throw input_error("point dimension does not match variable count");

  std::vector<Real> values;
  values.reserve(T.terms.size());
  bool first = true;
  Real best;
  for (const auto& [e, c] : T.terms) {
    Real v = c;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (e[i] != 0) v += Real(static_cast<long>(e[i])) * x[i];
    if (first || best < v) {
      best = v;
      first = false;
    }
    values.push_back(std::move(v));
  }
  Real tol = tie_tol ? *tie_tol : Real(1e-9) * (Real(1L) + abs(best));
  if (tol.sign() < 0) throw input_error("tie tolerance must be nonnegative");

  int attained = 0;
  for (const auto& v : values)
    if (!(v < best - tol) && ++attained >= 2) return true;
  return false;
}

}  // namespace amoeba
