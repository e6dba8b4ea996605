#ifndef AMOEBA_REAL_HPP
#define AMOEBA_REAL_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "amoeba/precision.hpp"

namespace amoeba {

/// Arbitrary-precision real number backed by MPFR.
///
/// Every value is allocated at the working precision in effect when it is
/// created (see precision.hpp); copies keep the precision of their source.
/// All operations round to nearest. The class is a value type: cheap enough
/// to pass around at desk scale, no shared state.
class Real {
 public:
  Real() { mpfr_init2(v_, prec()); mpfr_set_zero(v_, 1); }
  Real(double d) { mpfr_init2(v_, prec()); mpfr_set_d(v_, d, MPFR_RNDN); }
  Real(long i) { mpfr_init2(v_, prec()); mpfr_set_si(v_, i, MPFR_RNDN); }
  Real(int i) { mpfr_init2(v_, prec()); mpfr_set_si(v_, i, MPFR_RNDN); }

  /// Parses a decimal string (optional sign, fraction, exponent) at the
  /// current working precision. Throws input_error on trailing garbage.
  static Real from_string(const std::string& s);

  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, kMinPrecisionBits); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Shortest decimal string that reads back to the same value at the same
  /// precision (MPFR's faithful-digit count).
  std::string to_string() const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_inf() const { return mpfr_inf_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  friend Real operator+(const Real& a, const Real& b) { Real r; mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator-(const Real& a, const Real& b) { Real r; mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator*(const Real& a, const Real& b) { Real r; mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator/(const Real& a, const Real& b) { Real r; mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator-(const Real& a) { Real r; mpfr_neg(r.v_, a.v_, MPFR_RNDN); return r; }

  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }

  friend Real abs(const Real& a) { Real r; mpfr_abs(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real sqrt(const Real& a) { Real r; mpfr_sqrt(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real log(const Real& a) { Real r; mpfr_log(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real log1p(const Real& a) { Real r; mpfr_log1p(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real exp(const Real& a) { Real r; mpfr_exp(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real expm1(const Real& a) { Real r; mpfr_expm1(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real sin(const Real& a) { Real r; mpfr_sin(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real cos(const Real& a) { Real r; mpfr_cos(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real hypot(const Real& a, const Real& b) { Real r; mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real max(const Real& a, const Real& b) { return a < b ? b : a; }
  friend Real min(const Real& a, const Real& b) { return b < a ? b : a; }

  /// a * 2^e, exact apart from range limits.
  friend Real ldexp2(const Real& a, long e) { Real r; mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN); return r; }

  /// Integer power; n may be negative (requires a != 0 then).
  friend Real pow_si(const Real& a, long n) { Real r; mpfr_pow_si(r.v_, a.v_, n, MPFR_RNDN); return r; }

  static Real pi() { Real r; mpfr_const_pi(r.v_, MPFR_RNDN); return r; }

  /// 2^-k, the default comparison slack building block.
  static Real pow2(long k) { Real r; mpfr_set_si(r.raw(), 1, MPFR_RNDN); mpfr_mul_2si(r.raw(), r.raw(), k, MPFR_RNDN); return r; }

 private:
  static mpfr_prec_t prec() { return static_cast<mpfr_prec_t>(precision_bits()); }
  mpfr_t v_;
};

}  // namespace amoeba

#endif
