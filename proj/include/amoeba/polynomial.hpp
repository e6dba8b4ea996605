#ifndef AMOEBA_POLYNOMIAL_HPP
#define AMOEBA_POLYNOMIAL_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "amoeba/complexnum.hpp"

namespace amoeba {

/// Exponent vector of a Laurent monomial z_1^{j_1}...z_r^{j_r}.
/// std::vector's lexicographic operator< is the canonical term order.
using ExponentVector = std::vector<std::int64_t>;

/// Sparse Laurent polynomial in r variables with arbitrary-precision complex
/// coefficients. Invariants (maintained by add_term / the constructors below):
/// no zero coefficients are stored, duplicate exponents are summed, every
/// exponent vector has length r.
struct LaurentPolynomial {
  int r = 0;
  std::map<ExponentVector, Complex> terms;
};

/// Accumulates coeff onto the term at exp, dropping the entry if the sum is
/// exactly zero. exp must have length f.r.
void add_term(LaurentPolynomial& f, const ExponentVector& exp, const Complex& coeff);

/// Builds a polynomial from (exponent, coefficient) pairs; folds duplicates.
LaurentPolynomial make_polynomial(int r, const std::vector<std::pair<ExponentVector, Complex>>& entries);

/// Support, hull vertices and per-coordinate widths of the exponent set.
struct NewtonPolytopeData {
  int r = 0;
  std::vector<ExponentVector> support;    // sorted (lex)
  std::vector<ExponentVector> vertices;   // extreme points of the hull, sorted (lex)
  std::vector<std::int64_t> widths;       // c_i = max_j exp_i - min_j exp_i
  std::vector<std::int64_t> mins;         // componentwise min of the support
};

NewtonPolytopeData newton_polytope(const LaurentPolynomial& f);

/// Exact product at working precision. Throws input_error if the factors
/// have different r.
LaurentPolynomial multiply(const LaurentPolynomial& f, const LaurentPolynomial& g);

/// Coordinatewise substitution z_i -> phi_i * z_i: each term (j, b) becomes
/// (j, b * prod phi_i^{j_i}). For unit-modulus phases this preserves every
/// coefficient magnitude.
LaurentPolynomial rotate(const LaurentPolynomial& f, const std::vector<Complex>& phases);

/// One magnitude per term at the point a: log|b| + j.a, in term order.
/// Comparisons downstream happen in log space at working precision.
struct MagnitudeList {
  std::vector<std::pair<ExponentVector, Real>> entries;
};

MagnitudeList magnitude_list(const LaurentPolynomial& f, const std::vector<Real>& a);
MagnitudeList magnitude_list(const LaurentPolynomial& f, const std::vector<double>& a);

/// f(z) at full precision; z must have length r and nonzero entries if f has
/// negative exponents.
Complex evaluate(const LaurentPolynomial& f, const std::vector<Complex>& z);

/// f(z) in hardware floats, for oracle-side work.
std::complex<double> evaluate_d(const LaurentPolynomial& f, const std::vector<std::complex<double>>& z);

/// Parses the interchange format
///   {"r": <int>, "terms": [{"exp": [...], "re": "<dec>", "im": "<dec>"}...]}
/// (coefficient fields may also be plain JSON numbers). Throws input_error on
/// malformed input, inconsistent exponent lengths, or non-numeric strings.
LaurentPolynomial parse_polynomial(const std::string& json_text);

/// Inverse of parse_polynomial; decimal strings carry the full working
/// precision so parse(serialize(f)) == f at unchanged precision.
std::string serialize_polynomial(const LaurentPolynomial& f, int indent = -1);

}  // namespace amoeba

#endif
