#include "amoeba/resultant.hpp"

#include <cmath>
#include <map>
#include <utility>

#include "amoeba/bounds.hpp"
#include "amoeba/errors.hpp"
#include "amoeba/precision.hpp"

namespace amoeba {

namespace {

// Accumulates sparse products while remembering the largest magnitude ever
// added into each exponent bucket. A final sum far below that peak carries no
// correct bits (pure cancellation) and is dropped.
struct PruningAccumulator {
  std::map<ExponentVector, std::pair<Complex, Real>> buckets;  // sum, peak |term|

  void add(ExponentVector&& e, const Complex& v) {
    Real mag = abs(v);
    auto it = buckets.find(e);
    if (it == buckets.end()) {
      buckets.emplace(std::move(e), std::make_pair(v, std::move(mag)));
      return;
    }
    it->second.first += v;
    if (it->second.second < mag) it->second.second = std::move(mag);
  }

  LaurentPolynomial harvest(int r) const {
    const Real scale = Real::pow2(-static_cast<long>(precision_bits()));
    LaurentPolynomial h;
    h.r = r;
    for (const auto& [e, sp] : buckets) {
      const auto& [sum, peak] = sp;
      if (sum.is_zero()) continue;
      if (abs(sum) < peak * scale) continue;
      h.terms.emplace(e, sum);
    }
    return h;
  }
};

// acc * rotated; the rotation multiplies term (e, b) of f by
// prod_i zeta_i^(k_i e_i) with zeta_i = e^(2 pi i / n_i). Each phase power is
// taken at the exactly reduced angle, so phase error does not grow with |e|.
LaurentPolynomial multiply_by_rotated(const LaurentPolynomial& acc, const LaurentPolynomial& f,
                                      const std::vector<long>& k, const std::vector<long>& ns) {
  const int r = f.r;
  std::vector<std::pair<ExponentVector, Complex>> rotated;
  rotated.reserve(f.terms.size());
  for (const auto& [e, b] : f.terms) {
    Complex coeff = b;
    for (int i = 0; i < r; ++i) {
      const long n = ns[static_cast<std::size_t>(i)];
      if (n == 1) continue;
      long t = static_cast<long>((k[static_cast<std::size_t>(i)] * e[i]) % n);
      if (t < 0) t += n;
      if (t != 0) coeff *= root_of_unity(t, n);
    }
    rotated.emplace_back(e, std::move(coeff));
  }

  PruningAccumulator out;
  ExponentVector e(static_cast<std::size_t>(r));
  for (const auto& [ea, ca] : acc.terms)
    for (const auto& [eb, cb] : rotated) {
      for (int i = 0; i < r; ++i) e[static_cast<std::size_t>(i)] = ea[i] + eb[i];
      out.add(ExponentVector(e), ca * cb);
    }
  return out.harvest(r);
}

// Removes terms whose exponents break the per-variable divisibility law.
// Such coefficients must be numerically negligible next to the largest one;
// a large offender means the working precision was not enough.
LaurentPolynomial divisibility_filter(LaurentPolynomial&& g, const std::vector<long>& ns) {
  Real gmax(0L);
  for (const auto& [e, c] : g.terms) {
    Real m = abs(c);
    if (gmax < m) gmax = std::move(m);
  }
  const Real thresh = gmax * Real::pow2(-static_cast<long>(precision_bits() / 2));

  LaurentPolynomial h;
  h.r = g.r;
  for (auto& [e, c] : g.terms) {
    bool divisible = true;
    for (int i = 0; i < g.r && divisible; ++i)
      divisible = (e[i] % ns[static_cast<std::size_t>(i)] == 0);
    if (divisible) {
      h.terms.emplace(e, std::move(c));
      continue;
    }
    if (!(abs(c) < thresh))
      throw precision_error("precision exhausted: stray coefficient at a non-divisible exponent");
  }
  if (h.terms.empty())
    throw precision_error("precision exhausted: divisibility filter removed every term");
  return h;
}

LaurentPolynomial product_over_rotations(const LaurentPolynomial& f, const std::vector<long>& ns) {
  const int r = f.r;
  LaurentPolynomial acc;
  acc.r = r;
  acc.terms.emplace(ExponentVector(static_cast<std::size_t>(r), 0), Complex(1.0));

  std::vector<long> k(static_cast<std::size_t>(r), 0);
  for (;;) {
    acc = multiply_by_rotated(acc, f, k, ns);
    int i = 0;
    for (; i < r; ++i) {
      if (++k[static_cast<std::size_t>(i)] < ns[static_cast<std::size_t>(i)]) break;
      k[static_cast<std::size_t>(i)] = 0;
    }
    if (i == r) break;
  }
  return divisibility_filter(std::move(acc), ns);
}

}  // namespace

double predicted_resultant_terms(const LaurentPolynomial& f, long n) {
  const auto P = newton_polytope(f);
  const double d = lattice_count_bound(P, 1).to_double();
  const long e = static_cast<long>(P.r) * P.r - P.r;
  return d * std::pow(static_cast<double>(n), static_cast<double>(e));
}

LaurentPolynomial cyclic_resultant(const LaurentPolynomial& f, long n, double term_budget) {
  if (f.terms.empty()) throw degenerate_error("cyclic resultant of the zero polynomial");
  if (n < 1) throw input_error("rotation order must be a positive integer");
  const double predicted = predicted_resultant_terms(f, n);
  if (predicted > term_budget)
    throw budget_error("predicted resultant term count exceeds the budget", predicted);
  return product_over_rotations(f, std::vector<long>(static_cast<std::size_t>(f.r), n));
}

LaurentPolynomial general_cyclic_resultant(const LaurentPolynomial& f, const std::vector<long>& ns,
                                           double term_budget) {
  if (f.terms.empty()) throw degenerate_error("cyclic resultant of the zero polynomial");
  if (static_cast<int>(ns.size()) != f.r)
    throw input_error("one rotation order per variable required");
  for (long n : ns)
    if (n < 1) throw input_error("rotation orders must be positive integers");

  // Support sits in N*Delta with coordinate i divisible by n_i, N = prod n_i.
  const auto P = newton_polytope(f);
  double total = 1.0;
  for (long n : ns) total *= static_cast<double>(n);
  double predicted = 1.0;
  for (int i = 0; i < f.r; ++i) {
    const double ci = static_cast<double>(P.widths[static_cast<std::size_t>(i)]);
    predicted *= ci * total / static_cast<double>(ns[static_cast<std::size_t>(i)]) + 1.0;
  }
  if (predicted > term_budget)
    throw budget_error("predicted resultant term count exceeds the budget", predicted);
  return product_over_rotations(f, ns);
}

}  // namespace amoeba
