#pragma once

#include <map>
#include <optional>
#include <vector>

#include "amoeba/polynomial.hpp"
#include "amoeba/real.hpp"

namespace amoeba {

// One strict condition normal . x + offset > 0.
struct Halfspace {
  ExponentVector normal;
  Real offset;
};

// Conjunction of strict halfspaces carving out (part of) the complement
// component with the given index, derived from the order-n construction.
struct HalfspaceSystem {
  ExponentVector component_index;
  long n = 1;
  std::vector<Halfspace> inequalities;
};

// Max-plus polynomial: evaluation is max over terms of coeff + exp . x.
struct TropicalPolynomial {
  int r = 1;
  std::map<ExponentVector, Real> terms;
};

// One inequality per non-candidate term of resf (= the order-n construction
// of some f): (n^r k - j) . x + (log|B_k| - log|b_j| - log D) > 0. Returns
// nullopt when resf has no term at exponent n^r k (no such component at this
// resolution).
std::optional<HalfspaceSystem> component_polyhedron(const LaurentPolynomial& resf,
                                                    const ExponentVector& k, long n,
                                                    const Real& big_d);

struct FeasibilityResult {
  bool feasible = false;
  std::vector<double> witness;  // interior point when feasible
};

// Decides whether some x in the box |x_i| <= 1e6 satisfies every inequality
// with room strict_slack. Numerical solver trouble throws numeric_error
// rather than reporting Infeasible.
FeasibilityResult lp_feasible(const HalfspaceSystem& H, double strict_slack = 1e-9);

struct ComponentEntry {
  ExponentVector k;
  std::optional<HalfspaceSystem> system;  // nullopt: no candidate term
  bool feasible = false;
  std::vector<double> witness;
};

// Builds and feasibility-checks the polyhedron of every candidate index
// k in the Newton polytope's lattice points, using D = d * n^(r^2 - r).
std::vector<ComponentEntry> enumerate_components(const LaurentPolynomial& f, long n,
                                                 double term_budget = 1e7);

// Piecewise-linear amoeba skeleton estimate: term k -> (1/n^r) log|B_(n^r k)|
// for every candidate whose polyhedron is feasible.
TropicalPolynomial approximate_spine(const LaurentPolynomial& f, long n,
                                     double term_budget = 1e7);

Real tropical_eval(const TropicalPolynomial& T, const std::vector<Real>& x);

// True when the max is attained by at least two terms, within tie_tol.
// Default tolerance is relative: 1e-9 * (1 + |max|).
bool spine_membership(const TropicalPolynomial& T, const std::vector<Real>& x,
                      std::optional<Real> tie_tol = std::nullopt);

}  // namespace amoeba
