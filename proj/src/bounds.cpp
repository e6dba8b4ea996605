#include "amoeba/bounds.hpp"

#include <cmath>

#include "amoeba/errors.hpp"
#include "amoeba/polytope.hpp"

namespace amoeba {

namespace {

constexpr long kScanCap = 1000000000L;

// Smallest n in [1, kScanCap] with n*lhs_rate >= (log_coeff)*log(n) + constant.
// Scans upward; a cheap double pass skips n that are far from satisfying, the
// arbitrary-precision comparison decides near the boundary.
long scan_smallest_n(const Real& lhs_rate, long log_coeff, const Real& constant) {
  const double rate_d = lhs_rate.to_double();
  const double const_d = constant.to_double();
  for (long n = 1; n <= kScanCap; ++n) {
    const double lhs = rate_d * static_cast<double>(n);
    const double rhs = static_cast<double>(log_coeff) * std::log(static_cast<double>(n)) + const_d;
    if (lhs < rhs - 1e-9 * (1.0 + std::fabs(rhs))) continue;
    Real lhs_r = lhs_rate * Real(n);
    Real rhs_r = log(Real(n)) * Real(log_coeff) + constant;
    if (!(lhs_r < rhs_r)) return n;
  }
  throw budget_error("no admissible n within the scan cap", static_cast<double>(kScanCap));
}

}  // namespace

Real lattice_count_bound(const NewtonPolytopeData& P, long m, bool allow_fallback) {
  if (m < 1) throw input_error("dilation factor must be a positive integer");
  const std::uint64_t box = dilated_box_count(P, m);
  Real mr = pow_si(Real(m), P.r);
  if (box <= 10000000ULL) {
    const auto pts = lattice_points_in_dilated_hull(P, m);
    return Real(static_cast<long>(pts.size())) / mr;
  }
  if (!allow_fallback)
    throw budget_error("dilated bounding box too large for exact lattice enumeration",
                       static_cast<double>(box));
  Real prod(1L);
  for (int i = 0; i < P.r; ++i) prod *= Real(m * P.widths[static_cast<std::size_t>(i)] + 1);
  return prod / mr;
}

long lopsided_bound_n(const BoundInputs& inp) {
  if (!(inp.epsilon.sign() > 0)) throw input_error("epsilon must be positive");
  if (inp.r < 1) throw input_error("variable count must be positive");
  if (inp.c < 1) throw input_error("coordinate width bound must be at least 1");
  // constant = log((r+3) * 2^(r+1) * c)
  Real constant = log(ldexp2(Real(inp.r + 3) * Real(inp.c), inp.r + 1));
  return scan_smallest_n(inp.epsilon, inp.r - 1, constant);
}

long superlopsided_bound_n(const BoundInputs& inp) {
  if (!(inp.epsilon.sign() > 0)) throw input_error("epsilon must be positive");
  if (inp.r < 1) throw input_error("variable count must be positive");
  if (inp.c < 1) throw input_error("coordinate width bound must be at least 1");
  if (!(inp.d.sign() > 0)) throw input_error("lattice-count bound must be positive");
  // constant = log(16/3 * c * d)
  Real constant = log(Real(16L) / Real(3L) * Real(inp.c) * inp.d);
  return scan_smallest_n(inp.epsilon, static_cast<long>(inp.r) * inp.r - 1, constant);
}

long onevar_bound_n(const Real& gamma, long c0, long D0, long c1, long D1) {
  if (!(gamma.sign() > 0) || !(gamma < Real(1.0)))
    throw input_error("gamma must lie strictly between 0 and 1");
  if (c0 < 1 || c1 < 1 || D0 < 0 || D1 < 0) throw input_error("invalid degree or width inputs");
  Real rate = -log(gamma);
  Real constant = log(Real(8L) / Real(3L) * Real(c0) * Real(c1));
  return scan_smallest_n(rate, D0 + D1, constant);
}

}  // namespace amoeba
