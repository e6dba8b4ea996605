#pragma once

#include <string>
#include <vector>

#include "amoeba/geometry.hpp"
#include "amoeba/membership.hpp"
#include "amoeba/tropical.hpp"

namespace amoeba {

std::string mode_name(CertifyMode mode);
CertifyMode mode_from_name(const std::string& name);

std::string serialize_certificate(const Certificate& cert, int indent = -1);
Certificate parse_certificate(const std::string& json_text);

// Certified outcomes embed the certificate; uncertified ones report the
// schedule: {"certified":false,"last_n":...,"bound_n":...,"bound_reached":...}.
std::string serialize_outcome(const CertifyOutcome& outcome, int indent = -1);

std::string serialize_component_entries(const std::vector<ComponentEntry>& entries, long n,
                                        int indent = -1);

std::string serialize_tropical(const TropicalPolynomial& T, int indent = -1);
TropicalPolynomial parse_tropical(const std::string& json_text);

std::string serialize_valued(const ValuedPolynomial& vp, int indent = -1);
ValuedPolynomial parse_valued(const std::string& json_text);

}  // namespace amoeba
