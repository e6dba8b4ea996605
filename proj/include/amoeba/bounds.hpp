#pragma once

#include "amoeba/polynomial.hpp"
#include "amoeba/real.hpp"

namespace amoeba {

// Inputs of the convergence-rate formulas. epsilon is the distance from the
// query point to the amoeba, c the max coordinate width of the Newton
// polytope, d a lattice-count bound for it.
struct BoundInputs {
  Real epsilon;
  int r = 1;
  long c = 1;
  Real d = Real(1.0);
};

// Upper bound on #(lattice points of the m-fold dilate)/m^r. Exact by
// enumeration when the dilated bounding box holds at most 10^7 points,
// otherwise the box-count fallback prod(m*width_i + 1)/m^r. With
// allow_fallback = false the oversized case throws budget_error instead.
Real lattice_count_bound(const NewtonPolytopeData& P, long m, bool allow_fallback = true);

// Smallest n with n*eps >= (r-1)*log n + log((r+3)*2^(r+1)*c).
long lopsided_bound_n(const BoundInputs& inp);

// Smallest n with n*eps >= (r^2-1)*log n + log(16/3*c*d).
long superlopsided_bound_n(const BoundInputs& inp);

// Smallest n with n*log(1/gamma) >= (D0+D1)*log n + log(8/3*c0*c1).
long onevar_bound_n(const Real& gamma, long c0, long D0, long c1, long D1);

}  // namespace amoeba
