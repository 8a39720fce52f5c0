//------------------------------------------------------------------------------
//
//   Copyright 2026 PricingLab developers
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include <cmath>
#include <limits>

#include <doctest.h>

#include "pricinglab/errors.hpp"
#include "pricinglab/frontier.hpp"

using namespace pricinglab;

TEST_CASE("dual objective pins to hand-evaluated values") {
  CHECK(dual_objective(1.0, 1.0) ==
        doctest::Approx(2.0 - 2.0 * std::log(2.0)).epsilon(1e-14));
  CHECK(dual_objective(1.0, 0.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(dual_objective(10.0, 1.0) ==
        doctest::Approx(11.0 - 110.0 * std::log(1.1)).epsilon(1e-14));
  CHECK(dual_objective(10.0, 1.0) == doctest::Approx(0.5158802215242653).epsilon(1e-10));
  CHECK_THROWS_AS(dual_objective(0.0, 0.5), Error);
  CHECK_THROWS_AS(dual_objective(1.0, 1.5), Error);
}

TEST_CASE("r_star endpoints and known values") {
  CHECK(r_star(0.0).r == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::isinf(r_star(0.0).beta_argmin));

  FrontierPoint c1 = r_star(1.0);
  CHECK(c1.r == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(std::isinf(c1.beta_argmin));

  // the self-ratio point sits near 0.822
  CHECK(r_star(0.822).r == doctest::Approx(0.822).epsilon(0.01));

  CHECK_THROWS_AS(r_star(-0.1), Error);
  CHECK_THROWS_AS(r_star(1.1), Error);
}

TEST_CASE("r_star is the infimum of the objective") {
  for (double c : {0.1, 0.3, 0.5, 0.8, 0.95, 1.0}) {
    double r = r_star(c).r;
    for (double beta : {1e-5, 1e-3, 0.05, 0.3, 1.0, 3.0, 30.0, 1e4})
      CHECK(r <= dual_objective(beta, c) + 1e-12);
    // the refined interior minimum is genuinely attained nearby
    FrontierPoint p = r_star(c);
    if (!std::isinf(p.beta_argmin))
      CHECK(dual_objective(p.beta_argmin, c) == doctest::Approx(p.r).epsilon(1e-9));
  }
}

TEST_CASE("symmetric point") {
  FrontierPoint sym = symmetric_point();
  CHECK(std::abs(sym.c - sym.r) <= 1e-7);
  CHECK(sym.c >= 0.81);
  CHECK(sym.c <= 0.83);
  // the bisection bracket: h(0) = -1, h(1) = +0.5
  CHECK(0.0 - r_star(0.0).r == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(1.0 - r_star(1.0).r == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("baseline") {
  CHECK(baseline(0.0).r == 1.0);
  CHECK(baseline(1.0).r == 0.0);
  CHECK(baseline(0.5).r == 0.5);
  CHECK_THROWS_AS(baseline(2.0), Error);
}

TEST_CASE("sweep is monotone, concave, and dominates the baseline") {
  auto sweep = frontier_sweep(0.0, 1.0, 41);
  REQUIRE(sweep.size() == 41);
  CHECK(sweep.front().r == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sweep.back().r == doctest::Approx(0.5).epsilon(1e-6));
  for (std::size_t i = 0; i + 1 < sweep.size(); ++i)
    CHECK(sweep[i + 1].r <= sweep[i].r + 1e-9);
  for (std::size_t i = 1; i + 1 < sweep.size(); ++i)
    CHECK(sweep[i].r >= 0.5 * (sweep[i - 1].r + sweep[i + 1].r) - 1e-9);
  for (const auto& p : sweep) CHECK(p.r >= 1.0 - p.c - 1e-12);
  // strict dominance away from the left endpoint
  for (double c : {0.25, 0.5, 0.75, 1.0}) CHECK(r_star(c).r - (1.0 - c) >= 0.01);
  CHECK_THROWS_AS(frontier_sweep(0.0, 1.0, 1), Error);
}

TEST_CASE("three-point sweep hits the endpoints") {
  auto sweep = frontier_sweep(0.0, 1.0, 3);
  CHECK(sweep[0].r == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sweep[1].r > 0.5);
  CHECK(sweep[2].r == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("trimmed objective approaches 1 - C/2 at large beta") {
  for (double c : {0.0, 0.5, 1.0}) {
    double beta = 1e6;
    double trimmed = dual_objective(beta, c) - (1.0 - c) * beta;
    CHECK(std::abs(trimmed - (1.0 - 0.5 * c)) <= 1e-5);
  }
}

TEST_CASE("csv sweep output") {
  std::string csv = frontier_sweep_csv(0.0, 1.0, 3);
  CHECK(csv.rfind("C,R_star,beta_argmin,baseline_R\n", 0) == 0);
  CHECK(csv.find("\n0.5,") != std::string::npos);
  CHECK(csv.back() == '\n');
}
