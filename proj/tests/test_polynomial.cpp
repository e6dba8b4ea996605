#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "amoeba/errors.hpp"
#include "amoeba/polynomial.hpp"
#include "amoeba/rng.hpp"
#include "test_helpers.hpp"

using namespace amoeba;
using testutil::mk;
using testutil::pt;

TEST_CASE("parse builds terms and prunes zeros") {
  LaurentPolynomial f = parse_polynomial(
      R"({"r":1,"terms":[{"exp":[0],"re":"1","im":"0"},{"exp":[1],"re":"1","im":"0"}]})");
  CHECK(f.r == 1);
  REQUIRE(f.terms.size() == 2);
  CHECK(f.terms.at({0}).re == Real(1));
  CHECK(f.terms.at({1}).re == Real(1));

  LaurentPolynomial zero = parse_polynomial(R"({"r":2,"terms":[{"exp":[1,1],"re":"0","im":"0"}]})");
  CHECK(zero.terms.empty());

  LaurentPolynomial cancel = parse_polynomial(
      R"({"r":1,"terms":[{"exp":[2],"re":"1","im":"0"},{"exp":[2],"re":"-1","im":"0"}]})");
  CHECK(cancel.terms.empty());
}

TEST_CASE("parse accepts plain numbers for coefficients") {
  LaurentPolynomial f = parse_polynomial(R"({"r":1,"terms":[{"exp":[3],"re":2,"im":-0.5}]})");
  REQUIRE(f.terms.size() == 1);
  CHECK(f.terms.at({3}).re == Real(2));
  CHECK(f.terms.at({3}).im == Real(-0.5));
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parse_polynomial("not json"), input_error);
  CHECK_THROWS_AS(parse_polynomial(R"({"terms":[]})"), input_error);
  CHECK_THROWS_AS(parse_polynomial(R"({"r":0,"terms":[]})"), input_error);
  CHECK_THROWS_AS(parse_polynomial(R"({"r":2,"terms":[{"exp":[1],"re":"1","im":"0"}]})"),
                  input_error);
  CHECK_THROWS_AS(parse_polynomial(R"({"r":1,"terms":[{"exp":[1],"re":"oops","im":"0"}]})"),
                  input_error);
  CHECK_THROWS_AS(parse_polynomial(R"({"r":1,"terms":[{"exp":[1.5],"re":"1","im":"0"}]})"),
                  input_error);
  CHECK_THROWS_AS(parse_polynomial(R"({"r":1,"terms":[{"re":"1","im":"0"}]})"), input_error);
}

TEST_CASE("serialize round-trips exactly") {
  Rng rng{42};
  for (int trial = 0; trial < 20; ++trial) {
    const int r = 1 + static_cast<int>(rng.uniform_int(0, 2));
    LaurentPolynomial f = testutil::random_poly(rng, r, 6, -3, 4);
    LaurentPolynomial back = parse_polynomial(serialize_polynomial(f));
    CHECK(back.r == f.r);
    REQUIRE(back.terms.size() == f.terms.size());
    for (const auto& [e, c] : f.terms) {
      REQUIRE(back.terms.count(e) == 1);
      CHECK(back.terms.at(e).re == c.re);
      CHECK(back.terms.at(e).im == c.im);
    }
  }
}

TEST_CASE("newton polytope of small examples") {
  SUBCASE("trinomial with all vertices") {
    const auto P = newton_polytope(testutil::trinomial2());
    CHECK(P.support == std::vector<ExponentVector>{{0, 0}, {0, 2}, {1, 1}});
    CHECK(P.vertices == std::vector<ExponentVector>{{0, 0}, {0, 2}, {1, 1}});
    CHECK(P.widths == std::vector<std::int64_t>{1, 2});
    CHECK(P.mins == std::vector<std::int64_t>{0, 0});
  }
  SUBCASE("interior point excluded from vertices") {
    const auto P = newton_polytope(mk(1, {{{0}, 1.0}, {{1}, 1.0}, {{2}, 1.0}}));
    CHECK(P.vertices == std::vector<ExponentVector>{{0}, {2}});
    CHECK(P.widths == std::vector<std::int64_t>{2});
  }
  SUBCASE("unit square") {
    const auto P = newton_polytope(testutil::minus_grid());
    CHECK(P.vertices == std::vector<ExponentVector>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(P.widths == std::vector<std::int64_t>{1, 1});
  }
  SUBCASE("zero polynomial rejected") {
    LaurentPolynomial z;
    z.r = 1;
    CHECK_THROWS_AS(newton_polytope(z), degenerate_error);
  }
}

TEST_CASE("multiply matches hand expansion") {
  const LaurentPolynomial onepz = testutil::binomial1();
  const LaurentPolynomial onemz = mk(1, {{{0}, 1.0}, {{1}, -1.0}});
  CHECK(testutil::coeffs_close(multiply(onepz, onemz),
                               mk(1, {{{0}, 1.0}, {{2}, -1.0}}), 0.0));
  CHECK(testutil::coeffs_close(multiply(onepz, mk(1, {{{0}, 1.0}})), onepz, 0.0));
  CHECK(testutil::coeffs_close(multiply(onepz, onepz),
                               mk(1, {{{0}, 1.0}, {{1}, 2.0}, {{2}, 1.0}}), 0.0));
  CHECK_THROWS_AS(multiply(onepz, testutil::line2()), input_error);
}

TEST_CASE("rotate applies per-variable phases") {
  const LaurentPolynomial onepz = testutil::binomial1();
  SUBCASE("sign flip on the linear term") {
    const auto g = rotate(onepz, {Complex(-1.0, 0.0)});
    CHECK(testutil::coeffs_close(g, mk(1, {{{0}, 1.0}, {{1}, -1.0}}), 0.0));
  }
  SUBCASE("i times i gives -1 on the mixed term") {
    const LaurentPolynomial f = mk(2, {{{0, 0}, 1.0}, {{1, 1}, 1.0}});
    const auto g = rotate(f, {Complex(0.0, 1.0), Complex(0.0, 1.0)});
    CHECK(testutil::coeffs_close(g, mk(2, {{{0, 0}, 1.0}, {{1, 1}, -1.0}}), 0.0));
  }
  SUBCASE("identity phases") {
    const auto g = rotate(testutil::trinomial2(), {Complex(1.0), Complex(1.0)});
    CHECK(testutil::coeffs_close(g, testutil::trinomial2(), 0.0));
  }
  SUBCASE("non-unit phases rejected") {
    CHECK_THROWS_AS(rotate(onepz, {Complex(2.0, 0.0)}), input_error);
    CHECK_THROWS_AS(rotate(onepz, {Complex(0.5, 0.5)}), input_error);
  }
  SUBCASE("negative exponents use the inverse phase") {
    const LaurentPolynomial f = mk(1, {{{-1}, 1.0}});
    const auto g = rotate(f, {Complex(0.0, 1.0)});
    CHECK(g.terms.at({-1}).re.to_double() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(g.terms.at({-1}).im.to_double() == doctest::Approx(-1.0));
  }
}

TEST_CASE("magnitude lists at sample points") {
  SUBCASE("all magnitudes one at the origin") {
    const auto L = magnitude_list(testutil::trinomial2(), pt({0.0, 0.0}));
    REQUIRE(L.entries.size() == 3);
    for (const auto& [e, v] : L.entries) CHECK(v.is_zero());
  }
  SUBCASE("trinomial at (log 2, log 3)") {
    const auto L =
        magnitude_list(testutil::trinomial2(), pt({std::log(2.0), std::log(3.0)}));
    REQUIRE(L.entries.size() == 3);
    // term order is lexicographic: (0,0), (0,2), (1,1)
    CHECK(L.entries[0].second.to_double() == doctest::Approx(0.0));
    CHECK(L.entries[1].second.to_double() == doctest::Approx(std::log(9.0)));
    CHECK(L.entries[2].second.to_double() == doctest::Approx(std::log(6.0)));
  }
  SUBCASE("single scaled monomial") {
    const auto L = magnitude_list(mk(1, {{{3}, 2.0}}), pt({std::log(2.0)}));
    REQUIRE(L.entries.size() == 1);
    CHECK(L.entries[0].second.to_double() == doctest::Approx(std::log(16.0)));
  }
}

TEST_CASE("evaluate agrees between precisions") {
  const LaurentPolynomial f = mk(1, {{{-1}, 1.0}, {{0}, -2.0}, {{2}, {0.0, 1.0}}});
  const Complex v = evaluate(f, {Complex(2.0, 0.0)});
  // 1/2 - 2 + i*4
  CHECK(v.re.to_double() == doctest::Approx(-1.5));
  CHECK(v.im.to_double() == doctest::Approx(4.0));
  const auto vd = evaluate_d(f, {std::complex<double>(2.0, 0.0)});
  CHECK(vd.real() == doctest::Approx(-1.5));
  CHECK(vd.imag() == doctest::Approx(4.0));
}

TEST_CASE("rotation by roots of unity preserves every magnitude") {
  Rng rng{7};
  for (int trial = 0; trial < 15; ++trial) {
    const int r = 1 + static_cast<int>(rng.uniform_int(0, 1));
    LaurentPolynomial f = testutil::random_poly(rng, r, 5, -2, 3);
    std::vector<Complex> phases;
    for (int i = 0; i < r; ++i) {
      const long n = rng.uniform_int(1, 7);
      phases.push_back(root_of_unity(rng.uniform_int(0, n - 1), n));
    }
    std::vector<Real> a;
    for (int i = 0; i < r; ++i) a.emplace_back(rng.uniform(-1.0, 1.0));

    const auto L1 = magnitude_list(f, a);
    const auto L2 = magnitude_list(rotate(f, phases), a);
    REQUIRE(L1.entries.size() == L2.entries.size());
    for (std::size_t i = 0; i < L1.entries.size(); ++i) {
      CHECK(L1.entries[i].first == L2.entries[i].first);
      CHECK(abs(L1.entries[i].second - L2.entries[i].second).to_double() < 1e-70);
    }
  }
}

TEST_CASE("widths add under multiplication for positive coefficients") {
  Rng rng{11};
  for (int trial = 0; trial < 10; ++trial) {
    const int r = 1 + static_cast<int>(rng.uniform_int(0, 1));
    // Positive coefficients: no cancellation, so extreme exponents survive.
    auto positive = [&](int terms) {
      std::vector<std::pair<ExponentVector, Complex>> entries;
      for (int t = 0; t < terms; ++t) {
        ExponentVector e(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) e[static_cast<std::size_t>(i)] = rng.uniform_int(-2, 3);
        entries.emplace_back(std::move(e), Complex(rng.uniform(0.5, 2.0), 0.0));
      }
      return make_polynomial(r, entries);
    };
    LaurentPolynomial f = positive(3), g = positive(4);
    const auto Pf = newton_polytope(f), Pg = newton_polytope(g);
    const auto Pfg = newton_polytope(multiply(f, g));
    for (int i = 0; i < r; ++i) CHECK(Pfg.widths[i] == Pf.widths[i] + Pg.widths[i]);
  }
}

TEST_CASE("product magnitudes obey the convolution bound") {
  // max log-magnitude of f*g at a is at most max_f + max_g + log(pair count).
  Rng rng{13};
  for (int trial = 0; trial < 10; ++trial) {
    LaurentPolynomial f = testutil::random_poly(rng, 1, 5, -2, 3);
    LaurentPolynomial g = testutil::random_poly(rng, 1, 5, -2, 3);
    LaurentPolynomial h = multiply(f, g);
    if (h.terms.empty()) continue;
    std::vector<Real> a = {Real(rng.uniform(-1.0, 1.0))};
    auto maxlog = [&](const LaurentPolynomial& p) {
      const auto L = magnitude_list(p, a);
      Real best = L.entries.front().second;
      for (const auto& [e, v] : L.entries) best = max(best, v);
      return best;
    };
    const double pairs =
        static_cast<double>(std::min(f.terms.size(), g.terms.size()));
    CHECK(maxlog(h).to_double() <=
          maxlog(f).to_double() + maxlog(g).to_double() + std::log(pairs) + 1e-9);
  }
}
