#pragma once

#include <optional>
#include <vector>

#include "amoeba/lopsided.hpp"
#include "amoeba/polynomial.hpp"
#include "amoeba/real.hpp"
#include "amoeba/rng.hpp"

namespace amoeba {

enum class CertifyMode { Lopsided, Superlopsided };

// Verifiable record placing a point off the amoeba: the dominance test on
// the order-n construction at `point` passes with this margin. Checkable by
// anyone via check_certificate.
struct Certificate {
  std::vector<Real> point;
  long n = 1;
  CertifyMode mode = CertifyMode::Lopsided;
  ExponentVector dominant_exponent;
  Real margin;
  Real epsilon_claimed;
};

struct CertifyOutcome {
  bool certified = false;
  std::optional<Certificate> certificate;
  long last_n_tried = 0;
  // Smallest n the convergence theorem needs for this epsilon; when the
  // schedule exhausted it without certifying, the point provably lies within
  // epsilon of the amoeba.
  long bound_n = 0;
  bool bound_reached = false;
};

// Tries n = 1, 2, 4, ... up to the theorem bound for epsilon (optionally
// capped by n_cap, or pinned to a single n via n_override), testing the
// order-n construction at `a` for dominance. A returned certificate proves
// the point is outside the amoeba.
CertifyOutcome certify_outside(const LaurentPolynomial& f, const std::vector<Real>& a,
                               const Real& epsilon, CertifyMode mode,
                               std::optional<long> n_override = std::nullopt,
                               std::optional<long> n_cap = std::nullopt,
                               double term_budget = 1e7);

// Re-runs the dominance test recorded in the certificate. True when the
// verdict reproduces with the stated dominant exponent and at least the
// stated margin.
bool check_certificate(const LaurentPolynomial& f, const Certificate& cert,
                       double term_budget = 1e7);

// Per-variable root count of a random torus-fiber slice through a point
// outside the amoeba; identifies the complement component containing the
// point. Three independent fiber samples must agree.
ExponentVector component_index(const LaurentPolynomial& f, const std::vector<Real>& a,
                               std::uint64_t seed = 1);

struct OracleVerdict {
  bool in = false;
  double distance = 0.0;  // min |log|root| - a| seen (r = 1: exact over all roots)
};

// Independent ground truth for r = 1 by full root finding.
OracleVerdict oracle_membership_r1(const LaurentPolynomial& f, double a, double tol);

// Sampling ground truth for r = 2: sweeps phases of the first coordinate,
// root-solves the second. In answers are reliable; Out is sampling-limited.
OracleVerdict oracle_membership_r2(const LaurentPolynomial& f, double a1, double a2,
                                   int phase_samples, double tol);

}  // namespace amoeba
