#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "amoeba/polynomial.hpp"
#include "amoeba/real.hpp"

namespace amoeba {

// Outcome of a one-dominant-entry test on a magnitude list. margin is the
// log-domain gap minus the slack, so margin > 0 exactly when the test passed.
struct LopsidedVerdict {
  bool lopsided = false;
  std::optional<ExponentVector> dominant_exponent;
  Real margin;
};

// Safety slack in log domain: 2^(-precision_bits/2).
Real default_slack();

// Stable log(sum(exp(v_i))) over a non-empty list.
Real logsumexp(const std::vector<Real>& logs);

// True when one entry strictly exceeds the sum of all others by more than
// slack (log domain). Single-entry lists pass with a large sentinel margin.
LopsidedVerdict is_lopsided(const MagnitudeList& L, const Real& slack);
LopsidedVerdict is_lopsided(const MagnitudeList& L);

// True when one entry exceeds d_prime times every other entry, each
// comparison by more than slack in log domain.
LopsidedVerdict is_superlopsided(const MagnitudeList& L, long d_prime, const Real& slack);
LopsidedVerdict is_superlopsided(const MagnitudeList& L, long d_prime);

enum class RegionMembership { Inside, Outside };

struct MembershipVerdict {
  RegionMembership region;
  LopsidedVerdict verdict;
};

// Inside means the point lies in the outer approximation (test failed);
// Outside means the point is certified off the amoeba.
MembershipVerdict la_membership(const LaurentPolynomial& f, const std::vector<Real>& a,
                                const Real& slack);
MembershipVerdict la_membership(const LaurentPolynomial& f, const std::vector<Real>& a);

// Same with the multi-way dominance test at d_prime = #terms - 1.
MembershipVerdict sa_membership(const LaurentPolynomial& f, const std::vector<Real>& a,
                                const Real& slack);
MembershipVerdict sa_membership(const LaurentPolynomial& f, const std::vector<Real>& a);

}  // namespace amoeba
