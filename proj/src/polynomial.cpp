#include "amoeba/polynomial.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>

#include "amoeba/errors.hpp"
#include "amoeba/polytope.hpp"

namespace amoeba {

void add_term(LaurentPolynomial& f, const ExponentVector& exp, const Complex& coeff) {
  if (static_cast<int>(exp.size()) != f.r)
    throw input_error("exponent length does not match variable count");
  auto it = f.terms.find(exp);
  if (it == f.terms.end()) {
    if (!coeff.is_zero()) f.terms.emplace(exp, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) f.terms.erase(it);
}

LaurentPolynomial make_polynomial(int r, const std::vector<std::pair<ExponentVector, Complex>>& entries) {
  if (r < 1) throw input_error("variable count must be positive");
  LaurentPolynomial f;
  f.r = r;
  for (const auto& [e, c] : entries) add_term(f, e, c);
  return f;
}

NewtonPolytopeData newton_polytope(const LaurentPolynomial& f) {
  if (f.terms.empty()) throw degenerate_error("Newton polytope of the zero polynomial");
  NewtonPolytopeData P;
  P.r = f.r;
  P.support.reserve(f.terms.size());
  for (const auto& [e, c] : f.terms) P.support.push_back(e);

  P.mins.assign(f.r, std::numeric_limits<std::int64_t>::max());
  std::vector<std::int64_t> maxs(f.r, std::numeric_limits<std::int64_t>::min());
  for (const auto& e : P.support)
    for (int i = 0; i < f.r; ++i) {
      P.mins[i] = std::min(P.mins[i], e[i]);
      maxs[i] = std::max(maxs[i], e[i]);
    }
  P.widths.resize(f.r);
  for (int i = 0; i < f.r; ++i) P.widths[i] = maxs[i] - P.mins[i];

  P.vertices = hull_vertices(P.support, f.r);
  return P;
}

LaurentPolynomial multiply(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  if (f.r != g.r) throw input_error("multiplying polynomials in different variable counts");
  LaurentPolynomial h;
  h.r = f.r;
  ExponentVector e(f.r);
  for (const auto& [ef, cf] : f.terms)
    for (const auto& [eg, cg] : g.terms) {
      for (int i = 0; i < f.r; ++i) e[i] = ef[i] + eg[i];
      add_term(h, e, cf * cg);
    }
  return h;
}

LaurentPolynomial rotate(const LaurentPolynomial& f, const std::vector<Complex>& phases) {
  if (static_cast<int>(phases.size()) != f.r)
    throw input_error("rotate: one phase per variable required");
  const Real unit_tol(1e-9);
  for (const auto& p : phases)
    if (abs(abs(p) - Real(1)) > unit_tol)
      throw input_error("rotate: phases must have unit modulus");
  LaurentPolynomial h;
  h.r = f.r;
  for (const auto& [e, c] : f.terms) {
    Complex factor(1.0);
    for (int i = 0; i < f.r; ++i)
      if (e[i] != 0) factor *= pow_int(phases[static_cast<std::size_t>(i)], e[i]);
    h.terms.emplace(e, c * factor);
  }
  return h;
}

MagnitudeList magnitude_list(const LaurentPolynomial& f, const std::vector<Real>& a) {
  if (static_cast<int>(a.size()) != f.r)
    throw input_error("point dimension does not match variable count");
  MagnitudeList L;
  L.entries.reserve(f.terms.size());
  for (const auto& [e, c] : f.terms) {
    Real v = log(abs(c));
    for (int i = 0; i < f.r; ++i)
      if (e[i] != 0) v += Real(static_cast<long>(e[i])) * a[static_cast<std::size_t>(i)];
    L.entries.emplace_back(e, std::move(v));
  }
  return L;
}

MagnitudeList magnitude_list(const LaurentPolynomial& f, const std::vector<double>& a) {
  std::vector<Real> ra(a.begin(), a.end());
  return magnitude_list(f, ra);
}

Complex evaluate(const LaurentPolynomial& f, const std::vector<Complex>& z) {
  if (static_cast<int>(z.size()) != f.r)
    throw input_error("point dimension does not match variable count");
  Complex s(0.0);
  for (const auto& [e, c] : f.terms) {
    Complex t = c;
    for (int i = 0; i < f.r; ++i)
      if (e[i] != 0) t *= pow_int(z[static_cast<std::size_t>(i)], e[i]);
    s += t;
  }
  return s;
}

std::complex<double> evaluate_d(const LaurentPolynomial& f,
                                const std::vector<std::complex<double>>& z) {
  if (static_cast<int>(z.size()) != f.r)
    throw input_error("point dimension does not match variable count");
  std::complex<double> s = 0.0;
  for (const auto& [e, c] : f.terms) {
    std::complex<double> t = c.to_std();
    for (int i = 0; i < f.r; ++i) {
      const auto& zi = z[static_cast<std::size_t>(i)];
      const std::int64_t k = e[i];
      if (k != 0) t *= std::pow(zi, static_cast<double>(k));
    }
    s += t;
  }
  return s;
}

namespace {

Real coeff_part_from_json(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw input_error(std::string("term missing '") + key + "'");
  const auto& v = j.at(key);
  if (v.is_string()) return Real::from_string(v.get<std::string>());
  if (v.is_number()) return Real(v.get<double>());
  throw input_error(std::string("term field '") + key + "' must be a decimal string or number");
}

}  // namespace

LaurentPolynomial parse_polynomial(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(std::string("polynomial JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("r") || !j.contains("terms"))
    throw input_error("polynomial JSON must be an object with 'r' and 'terms'");
  if (!j.at("r").is_number_integer() || j.at("r").get<int>() < 1)
    throw input_error("'r' must be a positive integer");
  const int r = j.at("r").get<int>();
  if (!j.at("terms").is_array()) throw input_error("'terms' must be an array");

  LaurentPolynomial f;
  f.r = r;
  for (const auto& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("exp")) throw input_error("each term needs an 'exp' array");
    const auto& je = t.at("exp");
    if (!je.is_array() || static_cast<int>(je.size()) != r)
      throw input_error("term 'exp' must be an array of length r");
    ExponentVector e;
    e.reserve(je.size());
    for (const auto& x : je) {
      if (!x.is_number_integer()) throw input_error("exponents must be integers");
      e.push_back(x.get<std::int64_t>());
    }
    add_term(f, e, Complex(coeff_part_from_json(t, "re"), coeff_part_from_json(t, "im")));
  }
  return f;
}

std::string serialize_polynomial(const LaurentPolynomial& f, int indent) {
  nlohmann::json j;
  j["r"] = f.r;
  j["terms"] = nlohmann::json::array();
  for (const auto& [e, c] : f.terms) {
    nlohmann::json t;
    t["exp"] = e;
    t["re"] = c.re.to_string();
    t["im"] = c.im.to_string();
    j["terms"].push_back(std::move(t));
  }
  return j.dump(indent);
}

}  // namespace amoeba
