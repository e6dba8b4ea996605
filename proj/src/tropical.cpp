#include "amoeba/tropical.hpp"

#include "amoeba/errors.hpp"

namespace amoeba {

TropicalPolynomial tropicalize(const ValuedPolynomial& vp) {
  if (vp.terms.empty()) throw input_error("tropicalization of an empty polynomial");
  if (vp.r < 1) throw input_error("variable count must be positive");
  for (const auto& [e, v] : vp.terms) {
    if (static_cast<int>(e.size()) != vp.r)
      throw input_error("exponent length does not match variable count");
    if (v.is_nan() || v.is_inf()) throw input_error("valuations must be finite");
  }
  TropicalPolynomial T;
  T.r = vp.r;
  T.terms = vp.terms;
  return T;
}

std::vector<std::pair<ExponentVector, Real>> tropical_magnitude_list(const TropicalPolynomial& T,
                                                                     const std::vector<Real>& x) {
  if (T.terms.empty()) throw input_error("weights of an empty max-plus polynomial");
  if (static_cast<int>(x.size()) != T.r)
    throw input_error("point dimension does not match variable count");
  std::vector<std::pair<ExponentVector, Real>> out;
  out.reserve(T.terms.size());
  for (const auto& [e, c] : T.terms) {
    Real w = c;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (e[i] != 0) w += Real(static_cast<long>(e[i])) * x[i];
    out.emplace_back(e, std::move(w));
  }
  return out;
}

bool tropical_list_lopsided(const std::vector<std::pair<ExponentVector, Real>>& weights,
                            std::optional<Real> tie_tol) {
  if (weights.empty()) throw input_error("dominance test on an empty weight list");
  const Real* best = &weights[0].second;
  for (const auto& [e, w] : weights)
    if (*best < w) best = &w;
  Real tol = tie_tol ? *tie_tol : Real(1e-9) * (Real(1L) + abs(*best));
  if (tol.sign() < 0) throw input_error("tie tolerance must be nonnegative");
  int attained = 0;
  for (const auto& [e, w] : weights)
    if (!(w < *best - tol)) ++attained;
  return attained == 1;
}

bool tropical_membership(const TropicalPolynomial& T, const std::vector<Real>& x,
                         std::optional<Real> tie_tol) {
  return spine_membership(T, x, std::move(tie_tol));
}

}  // namespace amoeba
