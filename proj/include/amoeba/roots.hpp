#pragma once

#include <complex>
#include <vector>

namespace amoeba {

// All complex roots of a dense univariate polynomial, coeffs[k] multiplying
// z^k. Leading coefficients indistinguishable from zero are trimmed (their
// roots sit far outside any region of interest here); exact zeros at the
// origin are split off before iterating. Throws numeric_error when the
// simultaneous iteration fails to settle.
std::vector<std::complex<double>> polynomial_roots(const std::vector<std::complex<double>>& coeffs,
                                                   double tol = 1e-13, int max_iter = 400);

}  // namespace amoeba
