#pragma once

// Numeric verification grids for the auxiliary inequalities behind the
// convergence-rate formulas. Shared by the unit suite and the acceptance
// runner. All evaluation is double precision with expm1/log1p, which keeps
// relative error ~1e-15 while the inequalities hold with far larger gaps.

#include <algorithm>
#include <cmath>
#include <vector>

namespace appendix {

struct GridReport {
  long cases = 0;              // hypothesis-satisfying grid points checked
  long violations = 0;         // conclusion failures among them
  double worst_quotient = 0.0; // max of LHS/RHS over cases; < 1 means all hold
};

inline const std::vector<double>& gamma_grid() {
  static const std::vector<double> g{0.05, 0.2, 0.5, 0.8, 0.95};
  return g;
}

inline const std::vector<long>& coeff_grid() {
  static const std::vector<long> c{1, 2, 5};
  return c;
}

// Hypothesis: n log(1/gamma) >= (D0+D1) log n + log(8/3 c0 c1).
// Conclusions, with m_i = c_i n^{D_i}:
//   (a) m1 * ((1+gamma^n)^{m0} - 1) < 1/2
//   (b) (1+gamma^n)^{m0} < 3/2
// Grid: gamma in gamma_grid, c0,c1 in coeff_grid, D0,D1 in {0..3}, n in 1..60.
inline GridReport check_power_smallness() {
  GridReport rep;
  const long Ds[] = {0, 1, 2, 3};
  for (double gamma : gamma_grid())
    for (long c0 : coeff_grid())
      for (long c1 : coeff_grid())
        for (long D0 : Ds)
          for (long D1 : Ds)
            for (long n = 1; n <= 60; ++n) {
              const double lhs = n * std::log(1.0 / gamma);
              const double rhs = static_cast<double>(D0 + D1) * std::log(static_cast<double>(n)) +
                                 std::log(8.0 / 3.0 * static_cast<double>(c0 * c1));
              if (lhs < rhs) continue;
              ++rep.cases;
              const double m0 = static_cast<double>(c0) * std::pow(static_cast<double>(n), static_cast<double>(D0));
              const double m1 = static_cast<double>(c1) * std::pow(static_cast<double>(n), static_cast<double>(D1));
              const double gn = std::pow(gamma, static_cast<double>(n));
              const double pow_minus_1 = std::expm1(m0 * std::log1p(gn));
              const double qa = m1 * pow_minus_1 / 0.5;
              const double qb = (1.0 + pow_minus_1) / 1.5;
              const double q = std::max(qa, qb);
              if (!(q < 1.0)) ++rep.violations;
              rep.worst_quotient = std::max(rep.worst_quotient, q);
            }
  return rep;
}

// Hypothesis: n log(1/gamma) >= (r-1) log n + log((r+3) 2^{r+1} c).
// Conclusion: (e^{(r+2) c n^{r-1} gamma^n} - 1) / (2 - e^{c n^{r-1} gamma^n})
//             < 2^{-r-1}.
// Grid for one r: gamma in gamma_grid, c in coeff_grid, n in 1..60.
inline GridReport check_dominance_ratio(int r) {
  GridReport rep;
  for (double gamma : gamma_grid())
    for (long c : coeff_grid())
      for (long n = 1; n <= 60; ++n) {
        const double lhs = n * std::log(1.0 / gamma);
        const double rhs = static_cast<double>(r - 1) * std::log(static_cast<double>(n)) +
                           std::log((r + 3.0) * std::pow(2.0, r + 1) * static_cast<double>(c));
        if (lhs < rhs) continue;
        ++rep.cases;
        const double t = static_cast<double>(c) *
                         std::pow(static_cast<double>(n), static_cast<double>(r - 1)) *
                         std::pow(gamma, static_cast<double>(n));
        const double num = std::expm1((r + 2) * t);
        const double den = 2.0 - std::exp(t);
        const double bound = std::pow(2.0, static_cast<double>(-r - 1));
        const double q = (den > 0.0) ? (num / den) / bound : 2.0;
        if (!(q < 1.0)) ++rep.violations;
        rep.worst_quotient = std::max(rep.worst_quotient, q);
      }
  return rep;
}

// For x > 0, s >= 1:
//   sum_{w0>=1} C(w0+s-1, s-1) sum_{w>=w0} x^w/w!  <  e^{(s+1)x} - 1.
// Summing the binomial over w0 first collapses the left side to
// sum_{w>=1} (C(w+s, s) - 1) x^w/w!. The check truncates that series at
// w = W and adds the majorant of the tail
//   sum_{w>W} (C(w+s,s)-1) x^w/w! < 2^s sum_{w>W} (2x)^w/w!
//                                 <= 2^s (2x)^{W+1}/(W+1)! * (W+2)/(W+2-2x)
// (using C(w+s,s) <= 2^{w+s} and the geometric ratio 2x/(W+2) < 1), so
// truncated + tail_bound certifiably dominates the exact left side.
struct TailSumReport {
  double truncated = 0.0;
  double tail_bound = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

inline TailSumReport check_binomial_tail(double x, int s, int W = 60) {
  TailSumReport rep;
  double binom = 1.0;          // C(w+s, s), starting at w = 0
  double xw_over_fact = 1.0;   // x^w / w!
  double sum = 0.0;
  for (int w = 1; w <= W; ++w) {
    binom *= static_cast<double>(w + s) / static_cast<double>(w);
    xw_over_fact *= x / static_cast<double>(w);
    sum += (binom - 1.0) * xw_over_fact;
  }
  rep.truncated = sum;
  double head = std::pow(2.0, static_cast<double>(s)) * std::pow(2.0 * x, static_cast<double>(W + 1));
  for (int w = 1; w <= W + 1; ++w) head /= static_cast<double>(w);
  rep.tail_bound = head * static_cast<double>(W + 2) / (static_cast<double>(W + 2) - 2.0 * x);
  rep.rhs = std::expm1((s + 1) * x);
  rep.holds = (rep.truncated + rep.tail_bound) < rep.rhs;
  return rep;
}

inline const std::vector<double>& tail_x_grid() {
  static const std::vector<double> g{0.01, 0.1, 0.5, 1.0};
  return g;
}

}  // namespace appendix
