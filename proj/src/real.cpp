#include "amoeba/real.hpp"

#include <cctype>
#include <cstring>

#include "amoeba/errors.hpp"

namespace amoeba {

Real Real::from_string(const std::string& s) {
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  std::size_t end = s.size();
  while (end > start && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  const std::string body = s.substr(start, end - start);
  if (body.empty()) throw input_error("empty number string");
  Real r;
  char* rest = nullptr;
  mpfr_strtofr(r.v_, body.c_str(), &rest, 10, MPFR_RNDN);
  if (rest == body.c_str() || *rest != '\0')
    throw input_error("not a decimal number: '" + s + "'");
  return r;
}

std::string Real::to_string() const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
  if (mpfr_zero_p(v_)) return mpfr_signbit(v_) ? "-0" : "0";

  mpfr_exp_t e;
  // n = 0 requests just enough digits to read the value back exactly.
  char* digits = mpfr_get_str(nullptr, &e, 10, 0, v_, MPFR_RNDN);
  std::string d(digits);
  mpfr_free_str(digits);

  std::string sign;
  if (!d.empty() && d[0] == '-') {
    sign = "-";
    d.erase(0, 1);
  }
  // Trim trailing zeros but keep at least one digit.
  std::size_t last = d.find_last_not_of('0');
  d.erase(last + 1);

  // mpfr's exponent convention: value = 0.d1d2... * 10^e.
  // Render as d1.d2...e<k> with k = e-1 for compactness and exact re-parse.
  std::string mantissa = d.substr(0, 1);
  if (d.size() > 1) mantissa += "." + d.substr(1);
  long k = static_cast<long>(e) - 1;
  if (k == 0) return sign + mantissa;
  return sign + mantissa + "e" + std::to_string(k);
}

}  // namespace amoeba
