#include <doctest.h>

#include <cmath>
#include <vector>

#include "amoeba/errors.hpp"
#include "amoeba/geometry.hpp"
#include "amoeba/rng.hpp"
#include "amoeba/serialization.hpp"
#include "amoeba/tropical.hpp"
#include "test_helpers.hpp"

using namespace amoeba;
using testutil::pt;

namespace {

ValuedPolynomial valued(int r, std::vector<std::pair<ExponentVector, double>> entries) {
  ValuedPolynomial vp;
  vp.r = r;
  for (auto& [e, v] : entries) vp.terms.emplace(std::move(e), Real(v));
  return vp;
}

// valuations 0, -1, -3 on 1, z, z^2: max{0, x-1, 2x-3}
TropicalPolynomial chain() {
  return tropicalize(valued(1, {{{0}, 0.0}, {{1}, -1.0}, {{2}, -3.0}}));
}

}  // namespace

TEST_CASE("tropicalization carries valuations to max-plus coefficients") {
  SUBCASE("triangle with trivial valuations") {
    const auto T = tropicalize(valued(2, {{{0, 0}, 0.0}, {{1, 0}, 0.0}, {{0, 1}, 0.0}}));
    CHECK(T.r == 2);
    REQUIRE(T.terms.size() == 3);
    for (const auto& [e, c] : T.terms) CHECK(c.is_zero());
  }
  SUBCASE("single term") {
    const auto T = tropicalize(valued(1, {{{3}, 2.5}}));
    REQUIRE(T.terms.size() == 1);
    CHECK(T.terms.at({3}).to_double() == doctest::Approx(2.5));
  }
  SUBCASE("invalid data is rejected") {
    CHECK_THROWS_AS(tropicalize(ValuedPolynomial{}), input_error);
    CHECK_THROWS_AS(tropicalize(valued(0, {{{}, 1.0}})), input_error);
    CHECK_THROWS_AS(tropicalize(valued(2, {{{1}, 1.0}})), input_error);
    ValuedPolynomial inf = valued(1, {{{0}, 0.0}});
    inf.terms[{0}] = Real(1.0) / Real(0.0);
    CHECK_THROWS_AS(tropicalize(inf), input_error);
  }
}

TEST_CASE("univariate chain breakpoints") {
  const auto T = chain();

  SUBCASE("evaluation along the envelope") {
    CHECK(tropical_eval(T, pt({0.5})).to_double() == doctest::Approx(0.0));
    CHECK(tropical_eval(T, pt({1.5})).to_double() == doctest::Approx(0.5));
    CHECK(tropical_eval(T, pt({3.0})).to_double() == doctest::Approx(3.0));
  }

  SUBCASE("the hypersurface is the breakpoint set") {
    CHECK(tropical_membership(T, pt({1.0})));
    CHECK(tropical_membership(T, pt({2.0})));
    CHECK_FALSE(tropical_membership(T, pt({0.0})));
    CHECK_FALSE(tropical_membership(T, pt({1.5})));
    CHECK_FALSE(tropical_membership(T, pt({3.0})));
  }
}

TEST_CASE("weight lists and one-term dominance") {
  const auto T = tropicalize(valued(2, {{{0, 0}, 0.0}, {{1, 0}, 0.0}, {{0, 1}, 0.0}}));

  SUBCASE("weights at a point follow term order") {
    const auto w = tropical_magnitude_list(T, pt({1.0, 2.0}));
    REQUIRE(w.size() == 3);
    CHECK(w[0].first == (ExponentVector{0, 0}));
    CHECK(w[0].second.to_double() == doctest::Approx(0.0));
    CHECK(w[1].first == (ExponentVector{0, 1}));
    CHECK(w[1].second.to_double() == doctest::Approx(2.0));
    CHECK(w[2].first == (ExponentVector{1, 0}));
    CHECK(w[2].second.to_double() == doctest::Approx(1.0));
  }

  SUBCASE("dominance holds off the hypersurface and fails on it") {
    CHECK(tropical_list_lopsided(tropical_magnitude_list(T, pt({1.0, 2.0}))));
    CHECK_FALSE(tropical_list_lopsided(tropical_magnitude_list(T, pt({0.0, 0.0}))));
    CHECK_FALSE(tropical_list_lopsided(tropical_magnitude_list(T, pt({3.0, 3.0}))));
  }

  SUBCASE("empty list and negative tolerance are rejected") {
    CHECK_THROWS_AS(tropical_list_lopsided({}), input_error);
    CHECK_THROWS_AS(
        tropical_list_lopsided(tropical_magnitude_list(T, pt({0.0, 0.0})), Real(-1.0)),
        input_error);
  }
}

TEST_CASE("membership is the negation of one-term dominance") {
  Rng rng{911};
  for (int trial = 0; trial < 200; ++trial) {
    const int r = 1 + static_cast<int>(rng.uniform_int(0, 1));
    TropicalPolynomial T;
    T.r = r;
    const int k = 2 + static_cast<int>(rng.uniform_int(0, 3));
    while (static_cast<int>(T.terms.size()) < k) {
      ExponentVector e;
      for (int i = 0; i < r; ++i) e.push_back(rng.uniform_int(-3, 3));
      T.terms[e] = Real(rng.uniform(-2.0, 2.0));
    }
    std::vector<Real> x;
    for (int i = 0; i < r; ++i) x.emplace_back(rng.uniform(-2.0, 2.0));
    const bool member = tropical_membership(T, x);
    const bool dominated = tropical_list_lopsided(tropical_magnitude_list(T, x));
    CHECK(member == !dominated);
  }
}

TEST_CASE("a valued binomial locates its hypersurface at the valuation gap") {
  // 1 + c z with v(c) = -0.7: the max-plus root is x = 0.7
  const auto T = tropicalize(valued(1, {{{0}, 0.0}, {{1}, -0.7}}));
  CHECK(tropical_membership(T, pt({0.7})));
  CHECK_FALSE(tropical_membership(T, pt({0.6})));
  CHECK_FALSE(tropical_membership(T, pt({0.8})));
}

TEST_CASE("valued and max-plus JSON round trips") {
  SUBCASE("valued polynomial") {
    const auto vp = valued(2, {{{0, 0}, 0.0}, {{1, -2}, -1.25}, {{0, 3}, 2.0}});
    const auto back = parse_valued(serialize_valued(vp));
    CHECK(back.r == vp.r);
    REQUIRE(back.terms.size() == vp.terms.size());
    for (const auto& [e, v] : vp.terms) {
      REQUIRE(back.terms.count(e) == 1);
      CHECK(abs(back.terms.at(e) - v) < Real(1e-12));
    }
  }

  SUBCASE("max-plus polynomial") {
    const auto T = chain();
    const auto back = parse_tropical(serialize_tropical(T));
    CHECK(back.r == T.r);
    REQUIRE(back.terms.size() == T.terms.size());
    for (const auto& [e, c] : T.terms) CHECK(abs(back.terms.at(e) - c) < Real(1e-12));
  }

  SUBCASE("malformed input is rejected") {
    CHECK_THROWS_AS(parse_valued("not json"), input_error);
    CHECK_THROWS_AS(parse_valued("{\"r\": 1}"), input_error);
    CHECK_THROWS_AS(parse_valued("{\"r\": 0, \"terms\": []}"), input_error);
    CHECK_THROWS_AS(parse_valued("{\"r\": 1, \"terms\": []}"), input_error);
    CHECK_THROWS_AS(parse_valued("{\"r\": 2, \"terms\": [{\"exp\": [1], \"val\": 0}]}"),
                    input_error);
    CHECK_THROWS_AS(parse_tropical("{\"r\": 1, \"terms\": [{\"exp\": [1]}]}"), input_error);
  }
}

TEST_CASE("spine output and the valued pipeline agree") {
  // run the line's skeleton through serialization and the valued reader;
  // membership answers must be identical on a sample grid
  const auto T = approximate_spine(testutil::line2(), 1);
  ValuedPolynomial vp;
  vp.r = T.r;
  vp.terms = T.terms;
  const auto T2 = tropicalize(parse_valued(serialize_valued(vp)));
  for (double x1 : {-2.0, -1.0, 0.0, 1.0, 2.0})
    for (double x2 : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
      const auto p = pt({x1, x2});
      CHECK(tropical_membership(T, p) == tropical_membership(T2, p));
      CHECK(spine_membership(T, p) == tropical_membership(T, p));
    }
}
