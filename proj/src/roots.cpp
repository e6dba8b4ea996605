#include "amoeba/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "amoeba/errors.hpp"

namespace amoeba {

namespace {

using C = std::complex<double>;

struct HornerEval {
  C p;
  C dp;
  double noise;  // roundoff bound for |p|: eps * sum |c_k| |z|^k
};

// Horner evaluation of p and p' with a running error majorant. A residual at
// or below `noise` is indistinguishable from an exact zero in doubles.
HornerEval eval_with_derivative(const std::vector<C>& c, const C& z) {
  const double az = std::abs(z);
  C p = c.back();
  C dp = 0.0;
  double s = std::abs(p);
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[k];
    s = s * az + std::abs(c[k]);
  }
  return {p, dp, 4.0 * std::numeric_limits<double>::epsilon() * s};
}

}  // namespace

std::vector<C> polynomial_roots(const std::vector<C>& coeffs, double tol, int max_iter) {
  double cmax = 0.0;
  for (const auto& c : coeffs) cmax = std::max(cmax, std::abs(c));
  if (cmax == 0.0) throw input_error("root finding on the zero polynomial");

  // Coefficients this far below the largest are double-conversion residue;
  // keeping them would manufacture roots of astronomic magnitude.
  const double negligible = cmax * 1e-60;
  std::size_t hi = coeffs.size();
  while (hi > 0 && std::abs(coeffs[hi - 1]) <= negligible) --hi;
  std::size_t lo = 0;
  while (lo < hi && std::abs(coeffs[lo]) <= negligible) ++lo;

  std::vector<C> roots(lo, C(0.0));  // factor z^lo exactly
  if (hi - lo <= 1) return roots;    // constant after trimming

  std::vector<C> c(coeffs.begin() + static_cast<std::ptrdiff_t>(lo),
                   coeffs.begin() + static_cast<std::ptrdiff_t>(hi));
  const std::size_t deg = c.size() - 1;

  // Fujiwara inclusion radius: tracks the root scale even when a single
  // coefficient is huge, unlike the 1 + max|c_k/c_deg| bound.
  double radius = 0.0;
  for (std::size_t k = 0; k < deg; ++k) {
    const double ratio = std::abs(c[k] / c[deg]);
    if (ratio > 0.0)
      radius = std::max(radius, std::pow(ratio, 1.0 / static_cast<double>(deg - k)));
  }
  radius *= 2.0;

  std::vector<C> z(deg);
  for (std::size_t i = 0; i < deg; ++i) {
    // Irrational angle offset keeps starts away from root symmetry axes.
    const double theta = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(deg) + 0.7391;
    z[i] = 0.5 * radius * C(std::cos(theta), std::sin(theta));
  }

  std::vector<bool> locked(deg, false);
  for (int iter = 0; iter < max_iter; ++iter) {
    double worst = 0.0;
    for (std::size_t i = 0; i < deg; ++i) {
      if (locked[i]) continue;
      const auto [p, dp, noise] = eval_with_derivative(c, z[i]);
      if (std::abs(p) <= noise) {
        // at the evaluation roundoff floor; iterating further only bounces
        // the approximation inside its uncertainty disk
        locked[i] = true;
        continue;
      }
      C w;
      if (dp == C(0.0)) {
        w = C(1e-8 * (1.0 + std::abs(z[i])), 0.0);  // nudge off the critical point
      } else {
        const C newton = p / dp;
        C repel = 0.0;
        for (std::size_t j = 0; j < deg; ++j)
          if (j != i) repel += C(1.0) / (z[i] - z[j]);
        const C denom = C(1.0) - newton * repel;
        w = (denom == C(0.0)) ? newton : newton / denom;
      }
      z[i] -= w;
      worst = std::max(worst, std::abs(w) / (1.0 + std::abs(z[i])));
    }
    if (worst < tol) {
      roots.insert(roots.end(), z.begin(), z.end());
      return roots;
    }
  }
  throw numeric_error("root finding did not converge within the iteration limit");
}

}  // namespace amoeba
