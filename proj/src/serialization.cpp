#include "amoeba/serialization.hpp"

#include <json.hpp>

#include "amoeba/errors.hpp"

namespace amoeba {

namespace {

using nlohmann::json;

json parse_or_throw(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error(std::string(what) + ": " + e.what());
  }
}

ExponentVector exponent_from_json(const json& j) {
  if (!j.is_array()) throw input_error("exponent must be an array of integers");
  ExponentVector e;
  e.reserve(j.size());
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw input_error("exponents must be integers");
    e.push_back(x.get<std::int64_t>());
  }
  return e;
}

Real real_from_json(const json& j, const char* what) {
  if (j.is_string()) return Real::from_string(j.get<std::string>());
  if (j.is_number()) return Real(j.get<double>());
  throw input_error(std::string(what) + " must be a number or decimal string");
}

}  // namespace

std::string mode_name(CertifyMode mode) {
  return mode == CertifyMode::Lopsided ? "lopsided" : "superlopsided";
}

CertifyMode mode_from_name(const std::string& name) {
  if (name == "lopsided") return CertifyMode::Lopsided;
  if (name == "superlopsided" || name == "super") return CertifyMode::Superlopsided;
  throw input_error("unknown mode '" + name + "' (expected lopsided|super)");
}

std::string serialize_certificate(const Certificate& cert, int indent) {
  json j;
  j["point"] = json::array();
  for (const auto& x : cert.point) j["point"].push_back(x.to_double());
  j["n"] = cert.n;
  j["mode"] = mode_name(cert.mode);
  j["dominant_exp"] = cert.dominant_exponent;
  j["margin"] = cert.margin.to_double();
  j["epsilon"] = cert.epsilon_claimed.to_double();
  return j.dump(indent);
}

Certificate parse_certificate(const std::string& json_text) {
  const json j = parse_or_throw(json_text, "certificate JSON");
  if (!j.is_object()) throw input_error("certificate JSON must be an object");
  for (const char* key : {"point", "n", "mode", "dominant_exp", "margin", "epsilon"})
    if (!j.contains(key)) throw input_error(std::string("certificate missing '") + key + "'");
  Certificate cert;
  if (!j.at("point").is_array()) throw input_error("certificate point must be an array");
  for (const auto& x : j.at("point")) cert.point.push_back(real_from_json(x, "point entry"));
  if (!j.at("n").is_number_integer() || j.at("n").get<long>() < 1)
    throw input_error("certificate n must be a positive integer");
  cert.n = j.at("n").get<long>();
  if (!j.at("mode").is_string()) throw input_error("certificate mode must be a string");
  cert.mode = mode_from_name(j.at("mode").get<std::string>());
  cert.dominant_exponent = exponent_from_json(j.at("dominant_exp"));
  cert.margin = real_from_json(j.at("margin"), "margin");
  cert.epsilon_claimed = real_from_json(j.at("epsilon"), "epsilon");
  return cert;
}

std::string serialize_outcome(const CertifyOutcome& outcome, int indent) {
  if (outcome.certified && outcome.certificate) {
    const json cert = json::parse(serialize_certificate(*outcome.certificate));
    json j;
    j["certified"] = true;
    j["certificate"] = cert;
    j["last_n"] = outcome.last_n_tried;
    j["bound_n"] = outcome.bound_n;
    return j.dump(indent);
  }
  json j;
  j["certified"] = false;
  j["last_n"] = outcome.last_n_tried;
  j["bound_n"] = outcome.bound_n;
  j["bound_reached"] = outcome.bound_reached;
  return j.dump(indent);
}

std::string serialize_component_entries(const std::vector<ComponentEntry>& entries, long n,
                                        int indent) {
  json arr = json::array();
  for (const auto& entry : entries) {
    json j;
    j["k"] = entry.k;
    j["n"] = n;
    if (entry.system) {
      json ineqs = json::array();
      for (const auto& h : entry.system->inequalities) {
        json hj;
        hj["normal"] = h.normal;
        hj["offset"] = h.offset.to_double();
        ineqs.push_back(std::move(hj));
      }
      j["ineqs"] = std::move(ineqs);
    } else {
      j["ineqs"] = nullptr;
    }
    j["feasible"] = entry.feasible;
    if (entry.feasible)
      j["witness"] = entry.witness;
    else
      j["witness"] = nullptr;
    arr.push_back(std::move(j));
  }
  return arr.dump(indent);
}

std::string serialize_tropical(const TropicalPolynomial& T, int indent) {
  json j;
  j["r"] = T.r;
  j["terms"] = json::array();
  for (const auto& [e, c] : T.terms) {
    json t;
    t["exp"] = e;
    t["coeff"] = c.to_double();
    j["terms"].push_back(std::move(t));
  }
  return j.dump(indent);
}

TropicalPolynomial parse_tropical(const std::string& json_text) {
  const json j = parse_or_throw(json_text, "max-plus polynomial JSON");
  if (!j.is_object() || !j.contains("r") || !j.contains("terms"))
    throw input_error("max-plus JSON must be an object with 'r' and 'terms'");
  if (!j.at("r").is_number_integer() || j.at("r").get<int>() < 1)
    throw input_error("'r' must be a positive integer");
  TropicalPolynomial T;
  T.r = j.at("r").get<int>();
  if (!j.at("terms").is_array()) throw input_error("'terms' must be an array");
  for (const auto& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("exp") || !t.contains("coeff"))
      throw input_error("each term needs 'exp' and 'coeff'");
    ExponentVector e = exponent_from_json(t.at("exp"));
    if (static_cast<int>(e.size()) != T.r) throw input_error("exponent length must equal r");
    T.terms[std::move(e)] = real_from_json(t.at("coeff"), "coeff");
  }
  if (T.terms.empty()) throw input_error("max-plus polynomial needs at least one term");
  return T;
}

std::string serialize_valued(const ValuedPolynomial& vp, int indent) {
  json j;
  j["r"] = vp.r;
  j["terms"] = json::array();
  for (const auto& [e, v] : vp.terms) {
    json t;
    t["exp"] = e;
    t["val"] = v.to_double();
    j["terms"].push_back(std::move(t));
  }
  return j.dump(indent);
}

ValuedPolynomial parse_valued(const std::string& json_text) {
  const json j = parse_or_throw(json_text, "valued polynomial JSON");
  if (!j.is_object() || !j.contains("r") || !j.contains("terms"))
    throw input_error("valued JSON must be an object with 'r' and 'terms'");
  if (!j.at("r").is_number_integer() || j.at("r").get<int>() < 1)
    throw input_error("'r' must be a positive integer");
  ValuedPolynomial vp;
  vp.r = j.at("r").get<int>();
  if (!j.at("terms").is_array()) throw input_error("'terms' must be an array");
  for (const auto& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("exp") || !t.contains("val"))
      throw input_error("each term needs 'exp' and 'val'");
    ExponentVector e = exponent_from_json(t.at("exp"));
    if (static_cast<int>(e.size()) != vp.r) throw input_error("exponent length must equal r");
    vp.terms[std::move(e)] = real_from_json(t.at("val"), "val");
  }
  if (vp.terms.empty()) throw input_error("valued polynomial needs at least one term");
  return vp;
}

}  // namespace amoeba
