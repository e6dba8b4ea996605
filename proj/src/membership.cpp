#include "amoeba/membership.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "amoeba/bounds.hpp"
#include "amoeba/errors.hpp"
#include "amoeba/precision.hpp"
#include "amoeba/resultant.hpp"
#include "amoeba/roots.hpp"

namespace amoeba {

namespace {

LopsidedVerdict run_mode_test(const LaurentPolynomial& g, const std::vector<Real>& a,
                              CertifyMode mode) {
  const MagnitudeList L = magnitude_list(g, a);
  if (mode == CertifyMode::Lopsided) return is_lopsided(L);
  const long d_prime = std::max<long>(1, static_cast<long>(L.entries.size()) - 1);
  return is_superlopsided(L, d_prime);
}

std::vector<long> schedule_up_to(long cap) {
  std::vector<long> ns;
  for (long n = 1; n < cap; n *= 2) ns.push_back(n);
  ns.push_back(cap);
  return ns;
}

// Dense coefficients of z^(-mindeg) * (f restricted to variable `var`, the
// other coordinates pinned at zeta). Buckets whose sum collapsed far below
// the largest contribution are cancellation residue and come back as exact
// zeros; an all-zero slice returns empty coefficients.
struct SliceData {
  long mindeg = 0;
  std::vector<std::complex<double>> coeffs;
};

SliceData univariate_slice(const LaurentPolynomial& f, int var, const std::vector<Complex>& zeta) {
  std::map<std::int64_t, std::pair<Complex, Real>> buckets;  // sum, peak |term|
  for (const auto& [e, c] : f.terms) {
    Complex v = c;
    for (int j = 0; j < f.r; ++j) {
      if (j == var || e[j] == 0) continue;
      v *= pow_int(zeta[static_cast<std::size_t>(j)], e[j]);
    }
    Real mag = abs(v);
    auto it = buckets.find(e[var]);
    if (it == buckets.end()) {
      buckets.emplace(e[var], std::make_pair(std::move(v), std::move(mag)));
    } else {
      it->second.first += v;
      if (it->second.second < mag) it->second.second = std::move(mag);
    }
  }

  const Real scale = Real::pow2(-static_cast<long>(precision_bits() / 2));
  std::map<std::int64_t, Complex> clean;
  for (const auto& [deg, sp] : buckets) {
    const auto& [sum, peak] = sp;
    if (sum.is_zero()) continue;
    if (abs(sum) < peak * scale) continue;
    clean.emplace(deg, sum);
  }

  SliceData s;
  if (clean.empty()) return s;
  s.mindeg = clean.begin()->first;
  const std::int64_t maxdeg = clean.rbegin()->first;
  s.coeffs.assign(static_cast<std::size_t>(maxdeg - s.mindeg + 1), std::complex<double>(0.0));
  for (const auto& [deg, c] : clean)
    s.coeffs[static_cast<std::size_t>(deg - s.mindeg)] = c.to_std();
  return s;
}

std::vector<Complex> random_fiber_point(const std::vector<Real>& a, Rng& rng) {
  std::vector<Complex> zeta;
  zeta.reserve(a.size());
  for (const auto& ai : a) {
    const double theta = rng.uniform(0.0, 2.0 * M_PI);
    Real radius = exp(ai);
    zeta.emplace_back(radius * Real(std::cos(theta)), radius * Real(std::sin(theta)));
  }
  return zeta;
}

constexpr double kCircleRejectTol = 1e-6;

long slice_index(const LaurentPolynomial& f, int var, const std::vector<Complex>& zeta,
                 double radius) {
  const SliceData s = univariate_slice(f, var, zeta);
  if (s.coeffs.empty()) throw degenerate_error("fiber slice vanished identically");
  const auto roots = polynomial_roots(s.coeffs);
  long inside = 0;
  for (const auto& z : roots) {
    const double ratio = std::abs(z) / radius;
    if (std::fabs(ratio - 1.0) < kCircleRejectTol)
      throw numeric_error("slice root on the test circle: point too close to the amoeba");
    if (ratio < 1.0) ++inside;
  }
  return inside + s.mindeg;
}

}  // namespace

CertifyOutcome certify_outside(const LaurentPolynomial& f, const std::vector<Real>& a,
                               const Real& epsilon, CertifyMode mode,
                               std::optional<long> n_override, std::optional<long> n_cap,
                               double term_budget) {
  if (f.terms.empty()) throw degenerate_error("cannot certify against the zero polynomial");
  if (f.terms.size() == 1)
    throw degenerate_error("monomial has an empty amoeba; certification is vacuous");
  if (static_cast<int>(a.size()) != f.r)
    throw input_error("point dimension does not match variable count");
  if (!(epsilon.sign() > 0)) throw input_error("epsilon must be positive");

  const auto P = newton_polytope(f);
  BoundInputs inp;
  inp.epsilon = epsilon;
  inp.r = f.r;
  inp.c = *std::max_element(P.widths.begin(), P.widths.end());
  inp.d = lattice_count_bound(P, 1);
  const long bound =
      (mode == CertifyMode::Lopsided) ? lopsided_bound_n(inp) : superlopsided_bound_n(inp);

  CertifyOutcome out;
  out.bound_n = bound;

  std::vector<long> ns;
  if (n_override) {
    if (*n_override < 1) throw input_error("n override must be a positive integer");
    ns.push_back(*n_override);
  } else {
    long cap = bound;
    if (n_cap) cap = std::min(cap, std::max<long>(1, *n_cap));
    ns = schedule_up_to(cap);
  }

  for (long n : ns) {
    LaurentPolynomial g;
    try {
      g = cyclic_resultant(f, n, term_budget);
    } catch (const budget_error&) {
      std::ostringstream msg;
      msg << "certification at epsilon needs order " << bound
          << " whose resultant exceeds the term budget";
      throw budget_error(msg.str(), predicted_resultant_terms(f, bound));
    }
    out.last_n_tried = n;
    const LopsidedVerdict v = run_mode_test(g, a, mode);
    if (v.lopsided) {
      Certificate cert;
      cert.point = a;
      cert.n = n;
      cert.mode = mode;
      cert.dominant_exponent = *v.dominant_exponent;
      cert.margin = v.margin;
      cert.epsilon_claimed = epsilon;
      out.certified = true;
      out.certificate = std::move(cert);
      out.bound_reached = n >= bound;
      return out;
    }
  }
  out.bound_reached = out.last_n_tried >= bound;
  return out;
}

bool check_certificate(const LaurentPolynomial& f, const Certificate& cert, double term_budget) {
  const LaurentPolynomial g = cyclic_resultant(f, cert.n, term_budget);
  const LopsidedVerdict v = run_mode_test(g, cert.point, cert.mode);
  if (!v.lopsided || !v.dominant_exponent) return false;
  if (*v.dominant_exponent != cert.dominant_exponent) return false;
  const Real allowance = abs(cert.margin) * Real(1e-12) + Real::pow2(-40);
  return !(v.margin < cert.margin - allowance);
}

ExponentVector component_index(const LaurentPolynomial& f, const std::vector<Real>& a,
                               std::uint64_t seed) {
  if (f.terms.empty()) throw degenerate_error("component index of the zero polynomial");
  if (static_cast<int>(a.size()) != f.r)
    throw input_error("point dimension does not match variable count");

  Rng rng{seed};
  ExponentVector index(static_cast<std::size_t>(f.r), 0);
  for (int i = 0; i < f.r; ++i) {
    const double radius = exp(a[static_cast<std::size_t>(i)]).to_double();
    long agreed = 0;
    for (int trial = 0; trial < 3; ++trial) {
      const auto zeta = random_fiber_point(a, rng);
      const long k = slice_index(f, i, zeta, radius);
      if (trial == 0)
        agreed = k;
      else if (k != agreed)
        throw numeric_error("component index disagrees across fiber samples");
    }
    index[i] = agreed;
  }
  return index;
}

OracleVerdict oracle_membership_r1(const LaurentPolynomial& f, double a, double tol) {
  if (f.r != 1) throw input_error("univariate oracle needs r = 1");
  if (f.terms.empty()) throw degenerate_error("oracle on the zero polynomial");
  const SliceData s = univariate_slice(f, 0, {Complex(1.0)});
  if (s.coeffs.empty()) throw degenerate_error("oracle on a numerically zero polynomial");
  const auto roots = polynomial_roots(s.coeffs);
  OracleVerdict v;
  v.distance = std::numeric_limits<double>::infinity();
  for (const auto& z : roots) {
    const double m = std::abs(z);
    if (m == 0.0) continue;  // origin is outside the torus
    v.distance = std::min(v.distance, std::fabs(std::log(m) - a));
  }
  v.in = v.distance <= tol;
  return v;
}

OracleVerdict oracle_membership_r2(const LaurentPolynomial& f, double a1, double a2,
                                   int phase_samples, double tol) {
  if (f.r != 2) throw input_error("sweep oracle needs r = 2");
  if (f.terms.empty()) throw degenerate_error("oracle on the zero polynomial");
  if (phase_samples < 1) throw input_error("at least one phase sample required");

  OracleVerdict v;
  v.distance = std::numeric_limits<double>::infinity();
  const Real radius1 = exp(Real(a1));
  for (int s = 0; s < phase_samples; ++s) {
    const double theta = 2.0 * M_PI * static_cast<double>(s) / static_cast<double>(phase_samples);
    std::vector<Complex> zeta = {
        Complex(radius1 * Real(std::cos(theta)), radius1 * Real(std::sin(theta))), Complex(0.0)};
    const SliceData sl = univariate_slice(f, 1, zeta);
    if (sl.coeffs.size() <= 1) continue;  // vanished or constant slice: no torus roots
    for (const auto& z : polynomial_roots(sl.coeffs)) {
      const double m = std::abs(z);
      if (m == 0.0) continue;
      v.distance = std::min(v.distance, std::fabs(std::log(m) - a2));
    }
  }
  v.in = v.distance <= tol;
  return v;
}

}  // namespace amoeba
