#include <doctest.h>

#include <vector>

#include "amoeba/errors.hpp"
#include "amoeba/linprog.hpp"

using namespace amoeba;

TEST_CASE("optimal basic solutions") {
  SUBCASE("weighted split of a fixed sum") {
    // min x0 + 2 x1 subject to x0 + x1 = 1
    const auto r = simplex_solve({{1.0, 1.0}}, {1.0}, {1.0, 2.0});
    REQUIRE(r.status == SimplexStatus::Optimal);
    CHECK(r.objective == doctest::Approx(1.0));
    CHECK(r.x[0] == doctest::Approx(1.0));
    CHECK(r.x[1] == doctest::Approx(0.0));
  }
  SUBCASE("two binding constraints") {
    // min -x0 - x1, x0 + 2 x1 + s0 = 4, 3 x0 + x1 + s1 = 6
    const auto r = simplex_solve({{1.0, 2.0, 1.0, 0.0}, {3.0, 1.0, 0.0, 1.0}}, {4.0, 6.0},
                                 {-1.0, -1.0, 0.0, 0.0});
    REQUIRE(r.status == SimplexStatus::Optimal);
    // vertex (8/5, 6/5)
    CHECK(r.x[0] == doctest::Approx(1.6));
    CHECK(r.x[1] == doctest::Approx(1.2));
    CHECK(r.objective == doctest::Approx(-2.8));
  }
  SUBCASE("negative right-hand sides are normalized internally") {
    // -x0 = -3 means x0 = 3
    const auto r = simplex_solve({{-1.0}}, {-3.0}, {1.0});
    REQUIRE(r.status == SimplexStatus::Optimal);
    CHECK(r.x[0] == doctest::Approx(3.0));
  }
  SUBCASE("redundant duplicate rows") {
    const auto r = simplex_solve({{1.0, 1.0}, {1.0, 1.0}}, {2.0, 2.0}, {0.0, 1.0});
    REQUIRE(r.status == SimplexStatus::Optimal);
    CHECK(r.objective == doctest::Approx(0.0));
    CHECK(r.x[0] == doctest::Approx(2.0));
  }
}

TEST_CASE("infeasible systems are reported") {
  // x0 = 1 and x0 = 2 cannot both hold
  const auto r = simplex_solve({{1.0}, {1.0}}, {1.0, 2.0}, {0.0});
  CHECK(r.status == SimplexStatus::Infeasible);

  // x0 + x1 = -1 with x >= 0 (after normalization: -x0 - x1 = 1)
  const auto r2 = simplex_solve({{1.0, 1.0}}, {-1.0}, {0.0, 0.0});
  CHECK(r2.status == SimplexStatus::Infeasible);
}

TEST_CASE("unbounded objectives are reported") {
  // min -x0 with only 0 x0 = 0: x0 can grow without limit
  const auto r = simplex_solve({{0.0}}, {0.0}, {-1.0});
  CHECK(r.status == SimplexStatus::Unbounded);

  // min x0 - x1 with x0 + s = 1: x1 free upward
  const auto r2 = simplex_solve({{1.0, 0.0, 1.0}}, {1.0}, {1.0, -1.0, 0.0});
  CHECK(r2.status == SimplexStatus::Unbounded);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(simplex_solve({{1.0, 2.0}, {1.0}}, {1.0, 1.0}, {0.0, 0.0}), input_error);
  CHECK_THROWS_AS(simplex_solve({{1.0}}, {1.0, 2.0}, {0.0}), input_error);
  CHECK_THROWS_AS(simplex_solve({{1.0}}, {1.0}, {0.0, 0.0}), input_error);
}

TEST_CASE("convex hull membership") {
  const std::vector<std::vector<double>> square = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  CHECK(in_convex_hull({0.5, 0.5}, square));
  CHECK(in_convex_hull({0.0, 0.0}, square));
  CHECK(in_convex_hull({1.0, 0.5}, square));
  CHECK_FALSE(in_convex_hull({2.0, 0.0}, square));
  CHECK_FALSE(in_convex_hull({-0.1, 0.5}, square));
  CHECK_FALSE(in_convex_hull({0.5, 1.2}, square));

  // single point: only itself
  CHECK(in_convex_hull({2.0, 3.0}, {{2.0, 3.0}}));
  CHECK_FALSE(in_convex_hull({2.0, 3.1}, {{2.0, 3.0}}));
}
