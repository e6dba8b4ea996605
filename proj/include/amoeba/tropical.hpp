#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "amoeba/geometry.hpp"
#include "amoeba/polynomial.hpp"
#include "amoeba/real.hpp"

namespace amoeba {

// Valuation data of a polynomial over a valued field: exponent -> v(b).
struct ValuedPolynomial {
  int r = 1;
  std::map<ExponentVector, Real> terms;
};

// Reads the valuations as max-plus coefficients.
TropicalPolynomial tropicalize(const ValuedPolynomial& vp);

// Per-term weight coeff + exp . x at the point.
std::vector<std::pair<ExponentVector, Real>> tropical_magnitude_list(const TropicalPolynomial& T,
                                                                     const std::vector<Real>& x);

// Max-plus analogue of one-term dominance: the maximum weight is attained by
// exactly one term (strictly, up to tie_tol).
bool tropical_list_lopsided(const std::vector<std::pair<ExponentVector, Real>>& weights,
                            std::optional<Real> tie_tol = std::nullopt);

// True when the point lies on the max-plus hypersurface (max attained at
// least twice). Same semantics as spine_membership.
bool tropical_membership(const TropicalPolynomial& T, const std::vector<Real>& x,
                         std::optional<Real> tie_tol = std::nullopt);

}  // namespace amoeba
