#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "amoeba/errors.hpp"
#include "amoeba/roots.hpp"

using namespace amoeba;
using cd = std::complex<double>;

namespace {

std::vector<cd> sorted_by_real(std::vector<cd> v) {
  std::sort(v.begin(), v.end(), [](const cd& a, const cd& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return v;
}

cd horner(const std::vector<cd>& coeffs, cd z) {
  cd acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

// Monic expansion of prod (z - root).
std::vector<cd> from_roots(const std::vector<cd>& roots) {
  std::vector<cd> coeffs{1.0};
  for (const cd& root : roots) {
    std::vector<cd> next(coeffs.size() + 1, 0.0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= root * coeffs[i];
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

}  // namespace

TEST_CASE("distinct real roots") {
  // (z-2)(z-5) = 10 - 7z + z^2
  const auto roots = sorted_by_real(polynomial_roots({10.0, -7.0, 1.0}));
  REQUIRE(roots.size() == 2);
  CHECK(std::abs(roots[0] - cd(2.0)) < 1e-10);
  CHECK(std::abs(roots[1] - cd(5.0)) < 1e-10);
}

TEST_CASE("complex conjugate pair") {
  const auto roots = sorted_by_real(polynomial_roots({1.0, 0.0, 1.0}));
  REQUIRE(roots.size() == 2);
  const auto lo = roots[0], hi = roots[1];
  CHECK(std::abs(lo - cd(0.0, -1.0)) < 1e-10);
  CHECK(std::abs(hi - cd(0.0, 1.0)) < 1e-10);
}

TEST_CASE("residuals vanish at computed roots") {
  const std::vector<cd> coeffs{cd(3.0, 1.0), cd(-2.0, 0.5), cd(0.0, -1.0), cd(1.0)};
  const auto roots = polynomial_roots(coeffs);
  REQUIRE(roots.size() == 3);
  double scale = 0.0;
  for (const auto& c : coeffs) scale = std::max(scale, std::abs(c));
  for (const auto& z : roots) CHECK(std::abs(horner(coeffs, z)) < 1e-8 * scale);
}

TEST_CASE("triple root cluster") {
  // (z-1)^3: a cluster is resolved to roughly the cube root of working accuracy
  const auto roots = polynomial_roots({-1.0, 3.0, -3.0, 1.0});
  REQUIRE(roots.size() == 3);
  for (const auto& z : roots) CHECK(std::abs(z - cd(1.0)) < 1e-4);
}

TEST_CASE("origin roots are exact") {
  // z^2 (1+z): the factored-out zeros carry no iteration error
  const auto roots = sorted_by_real(polynomial_roots({0.0, 0.0, 1.0, 1.0}));
  REQUIRE(roots.size() == 3);
  CHECK(roots[1] == cd(0.0));
  CHECK(roots[2] == cd(0.0));
  CHECK(std::abs(roots[0] - cd(-1.0)) < 1e-12);
}

TEST_CASE("well separated integer roots at degree ten") {
  std::vector<cd> wilkinson_roots;
  for (int k = 1; k <= 10; ++k) wilkinson_roots.push_back(cd(static_cast<double>(k)));
  const auto coeffs = from_roots(wilkinson_roots);
  const auto roots = sorted_by_real(polynomial_roots(coeffs));
  REQUIRE(roots.size() == 10);
  for (int k = 1; k <= 10; ++k)
    CHECK(std::abs(roots[static_cast<std::size_t>(k - 1)] - cd(static_cast<double>(k))) < 1e-6);
}

TEST_CASE("invalid and trivial inputs") {
  CHECK_THROWS_AS(polynomial_roots({}), input_error);
  CHECK_THROWS_AS(polynomial_roots({cd(0.0), cd(0.0)}), input_error);  // zero polynomial
  CHECK(polynomial_roots({cd(1.0)}).empty());                          // nonzero constant
}

TEST_CASE("leading zeros are trimmed") {
  // 10 - 7z + z^2 with two vanishing leading coefficients
  const auto roots = sorted_by_real(polynomial_roots({10.0, -7.0, 1.0, 0.0, 0.0}));
  REQUIRE(roots.size() == 2);
  CHECK(std::abs(roots[0] - cd(2.0)) < 1e-10);
  CHECK(std::abs(roots[1] - cd(5.0)) < 1e-10);
}
