#ifndef AMOEBA_COMPLEXNUM_HPP
#define AMOEBA_COMPLEXNUM_HPP

#include <complex>

#include "amoeba/real.hpp"

namespace amoeba {

/// Complex number over Real. Rectangular form; the precision of a value is
/// the precision of its parts.
struct Complex {
  Real re;
  Real im;

  Complex() = default;
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(double r, double i = 0.0) : re(r), im(i) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }

  Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
  Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
  Complex& operator*=(const Complex& o) { *this = *this * o; return *this; }

  friend Complex conj(const Complex& a) { return {a.re, -a.im}; }
  friend Real abs(const Complex& a) { return hypot(a.re, a.im); }
  friend Real norm(const Complex& a) { return a.re * a.re + a.im * a.im; }

  friend Complex inverse(const Complex& a) {
    Real n = norm(a);
    return {a.re / n, -a.im / n};
  }

  /// a^n by binary exponentiation; negative n inverts first (a must be nonzero).
  friend Complex pow_int(const Complex& a, long long n) {
    if (n < 0) return pow_int(inverse(a), -n);
    Complex result(1.0);
    Complex base = a;
    unsigned long long e = static_cast<unsigned long long>(n);
    while (e > 0) {
      if (e & 1ULL) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  std::complex<double> to_std() const { return {re.to_double(), im.to_double()}; }
};

/// Unit phase e^{i*2*pi*k/n} at working precision.
inline Complex root_of_unity(long k, long n) {
  Real theta = (Real(2) * Real::pi() * Real(k)) / Real(n);
  return {cos(theta), sin(theta)};
}

}  // namespace amoeba

#endif
