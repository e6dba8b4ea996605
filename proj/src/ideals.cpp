#include "amoeba/ideals.hpp"

#include "amoeba/errors.hpp"

namespace amoeba {

namespace {

// Term rewrite (j, b) -> (-j, conj(b) * e^(2 a . j)) implementing the
// substitution z_i -> e^(2 a_i) z_i^-1 with conjugated coefficients.
LaurentPolynomial reflected_conjugate(const LaurentPolynomial& g, const std::vector<Real>& a) {
  LaurentPolynomial h;
  h.r = g.r;
  for (const auto& [j, b] : g.terms) {
    Real dot(0L);
    for (int i = 0; i < g.r; ++i)
      if (j[i] != 0) dot += Real(static_cast<long>(j[i])) * a[static_cast<std::size_t>(i)];
    const Real factor = exp(ldexp2(dot, 1));  // e^(2 a . j)
    ExponentVector e(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) e[i] = -j[i];
    h.terms.emplace(std::move(e), conj(b) * Complex(factor, Real(0L)));
  }
  return h;
}

}  // namespace

LaurentPolynomial witness_polynomial(const std::vector<LaurentPolynomial>& gens,
                                     const std::vector<Real>& a) {
  if (gens.empty()) throw input_error("at least one generator required");
  const int r = gens.front().r;
  if (static_cast<int>(a.size()) != r)
    throw input_error("point dimension does not match variable count");

  LaurentPolynomial acc;
  acc.r = r;
  for (const auto& g : gens) {
    if (g.r != r) throw input_error("generators live in different variable counts");
    if (g.terms.empty()) throw degenerate_error("zero generator");
    const LaurentPolynomial prod = multiply(g, reflected_conjugate(g, a));
    for (const auto& [e, c] : prod.terms) add_term(acc, e, c);
  }
  if (acc.terms.empty())
    throw degenerate_error("witness element collapsed to zero");
  return acc;
}

CertifyOutcome certify_outside_ideal(const std::vector<LaurentPolynomial>& gens,
                                     const std::vector<Real>& a, const Real& epsilon, long n_max,
                                     CertifyMode mode, double term_budget) {
  if (n_max < 1) throw input_error("order cap must be a positive integer");
  const LaurentPolynomial fa = witness_polynomial(gens, a);

  if (fa.terms.size() == 1) {
    // Nonvanishing monomial on the fiber: the point is trivially outside.
    CertifyOutcome out;
    Certificate cert;
    cert.point = a;
    cert.n = 1;
    cert.mode = mode;
    cert.dominant_exponent = fa.terms.begin()->first;
    cert.margin = Real(1e300);
    cert.epsilon_claimed = epsilon;
    out.certified = true;
    out.certificate = std::move(cert);
    out.last_n_tried = 1;
    out.bound_n = 1;
    out.bound_reached = true;
    return out;
  }
  return certify_outside(fa, a, epsilon, mode, std::nullopt, n_max, term_budget);
}

}  // namespace amoeba
