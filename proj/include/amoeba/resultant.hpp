#pragma once

#include <vector>

#include "amoeba/polynomial.hpp"

namespace amoeba {

inline constexpr double kDefaultTermBudget = 1e7;

// Upper estimate of the term count of the n-fold construction below,
// d * n^(r^2 - r) with d the exact lattice count of the Newton polytope.
double predicted_resultant_terms(const LaurentPolynomial& f, long n);

// Expanded product of f over all n-th root-of-unity rotations of every
// variable (n^r factors). Every exponent of the result is componentwise
// divisible by n; coefficients at non-divisible exponents are rounding
// residue and are checked against a threshold, then removed.
LaurentPolynomial cyclic_resultant(const LaurentPolynomial& f, long n,
                                   double term_budget = kDefaultTermBudget);

// Per-variable order variant: factor k ranges over {0..n_1-1} x ... x
// {0..n_r-1}; exponents in variable i come out divisible by n_i. With all
// n_i = n this equals cyclic_resultant(f, n). No convergence guarantee is
// attached to unbalanced orders.
LaurentPolynomial general_cyclic_resultant(const LaurentPolynomial& f,
                                           const std::vector<long>& ns,
                                           double term_budget = kDefaultTermBudget);

}  // namespace amoeba
