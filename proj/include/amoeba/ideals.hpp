#pragma once

#include <vector>

#include "amoeba/membership.hpp"
#include "amoeba/polynomial.hpp"
#include "amoeba/real.hpp"

namespace amoeba {

// Combines the generators into the single element
//   sum_i f_i(z) * conj-coeffs(f_i)(e^(2 a_1) z_1^-1, ..., e^(2 a_r) z_r^-1),
// which on the torus fiber over `a` equals sum_i |f_i(z)|^2. Any dominance
// certificate for it excludes the fiber from the vanishing set of the ideal.
LaurentPolynomial witness_polynomial(const std::vector<LaurentPolynomial>& gens,
                                     const std::vector<Real>& a);

// Builds the witness element for `a` and runs the hypersurface certification
// on it, order schedule capped at n_max. A certificate proves the point lies
// outside the ideal's amoeba; failure at the cap only bounds the distance to
// the witness element's own amoeba.
CertifyOutcome certify_outside_ideal(const std::vector<LaurentPolynomial>& gens,
                                     const std::vector<Real>& a, const Real& epsilon,
                                     long n_max = 64, CertifyMode mode = CertifyMode::Lopsided,
                                     double term_budget = 1e7);

}  // namespace amoeba
