#include "amoeba/lopsided.hpp"

#include <algorithm>

#include "amoeba/errors.hpp"
#include "amoeba/precision.hpp"

namespace amoeba {

namespace {

// Finite stand-in for the +inf margin of a single-entry list.
Real singleton_margin() { return Real(1e300); }

std::size_t argmax_entry(const MagnitudeList& L) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < L.entries.size(); ++i)
    if (L.entries[best].second < L.entries[i].second) best = i;
  return best;
}

}  // namespace

Real default_slack() { return Real::pow2(-static_cast<long>(precision_bits() / 2)); }

Real logsumexp(const std::vector<Real>& logs) {
  if (logs.empty()) throw input_error("logsumexp of an empty list");
  const Real* m = &logs[0];
  for (const auto& v : logs)
    if (*m < v) m = &v;
  Real acc(0L);
  for (const auto& v : logs) acc += exp(v - *m);
  return *m + log(acc);
}

LopsidedVerdict is_lopsided(const MagnitudeList& L, const Real& slack) {
  if (L.entries.empty()) throw input_error("lopsidedness test on an empty list");
  if (slack.sign() < 0) throw input_error("slack must be nonnegative");
  LopsidedVerdict v;
  if (L.entries.size() == 1) {
    v.lopsided = true;
    v.dominant_exponent = L.entries[0].first;
    v.margin = singleton_margin();
    return v;
  }
  // Only the largest entry can beat the sum of the rest.
  const std::size_t k = argmax_entry(L);
  std::vector<Real> others;
  others.reserve(L.entries.size() - 1);
  for (std::size_t i = 0; i < L.entries.size(); ++i)
    if (i != k) others.push_back(L.entries[i].second);
  v.margin = L.entries[k].second - logsumexp(others) - slack;
  v.lopsided = v.margin.sign() > 0;
  if (v.lopsided) v.dominant_exponent = L.entries[k].first;
  return v;
}

LopsidedVerdict is_lopsided(const MagnitudeList& L) { return is_lopsided(L, default_slack()); }

LopsidedVerdict is_superlopsided(const MagnitudeList& L, long d_prime, const Real& slack) {
  if (L.entries.empty()) throw input_error("superlopsidedness test on an empty list");
  if (d_prime < 1) throw input_error("dominance factor must be a positive integer");
  if (slack.sign() < 0) throw input_error("slack must be nonnegative");
  LopsidedVerdict v;
  if (L.entries.size() == 1) {
    v.lopsided = true;
    v.dominant_exponent = L.entries[0].first;
    v.margin = singleton_margin();
    return v;
  }
  // For d_prime >= 1 only the largest entry can dominate every other one.
  const std::size_t k = argmax_entry(L);
  const Real logd = log(Real(d_prime));
  bool first = true;
  Real worst;
  for (std::size_t i = 0; i < L.entries.size(); ++i) {
    if (i == k) continue;
    Real gap = L.entries[k].second - logd - L.entries[i].second;
    if (first || gap < worst) {
      worst = std::move(gap);
      first = false;
    }
  }
  v.margin = worst - slack;
  v.lopsided = v.margin.sign() > 0;
  if (v.lopsided) v.dominant_exponent = L.entries[k].first;
  return v;
}

LopsidedVerdict is_superlopsided(const MagnitudeList& L, long d_prime) {
  return is_superlopsided(L, d_prime, default_slack());
}

MembershipVerdict la_membership(const LaurentPolynomial& f, const std::vector<Real>& a,
                                const Real& slack) {
  MembershipVerdict mv;
  mv.verdict = is_lopsided(magnitude_list(f, a), slack);
  mv.region = mv.verdict.lopsided ? RegionMembership::Outside : RegionMembership::Inside;
  return mv;
}

MembershipVerdict la_membership(const LaurentPolynomial& f, const std::vector<Real>& a) {
  return la_membership(f, a, default_slack());
}

MembershipVerdict sa_membership(const LaurentPolynomial& f, const std::vector<Real>& a,
                                const Real& slack) {
  const long d_prime = std::max<long>(1, static_cast<long>(f.terms.size()) - 1);
  MembershipVerdict mv;
  mv.verdict = is_superlopsided(magnitude_list(f, a), d_prime, slack);
  mv.region = mv.verdict.lopsided ? RegionMembership::Outside : RegionMembership::Inside;
  return mv;
}

MembershipVerdict sa_membership(const LaurentPolynomial& f, const std::vector<Real>& a) {
  return sa_membership(f, a, default_slack());
}

}  // namespace amoeba
