#ifndef AMOEBA_ERRORS_HPP
#define AMOEBA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace amoeba {

// Base class for everything this library throws on purpose.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent input (bad JSON, dimension mismatch, bad flags).
class input_error : public error {
 public:
  explicit input_error(const std::string& msg) : error(msg) {}
};

// Structurally valid input the operation cannot work with (zero polynomial,
// monomial where zeros are required, empty generator list, ...).
class degenerate_error : public error {
 public:
  explicit degenerate_error(const std::string& msg) : error(msg) {}
};

// Predicted work exceeds the configured budget; carries the offending size.
class budget_error : public error {
 public:
  budget_error(const std::string& msg, double predicted)
      : error(msg), predicted_size(predicted) {}
  double predicted_size;
};

// Working precision cannot separate genuine coefficients from rounding noise.
class precision_error : public error {
 public:
  explicit precision_error(const std::string& msg) : error(msg) {}
};

// A numeric subroutine (root finder, LP, index agreement) failed to reach a
// trustworthy answer; distinct from a negative mathematical verdict.
class numeric_error : public error {
 public:
  explicit numeric_error(const std::string& msg) : error(msg) {}
};

}  // namespace amoeba

#endif
