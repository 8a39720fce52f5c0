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
#include <random>

#include <doctest.h>

#include "pricinglab/errors.hpp"
#include "pricinglab/prior.hpp"

using namespace pricinglab;

namespace {

DiscretePrior two_point() { return DiscretePrior({1.0, 2.0}, {0.5, 0.5}); }

double canonical(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

TEST_CASE("monopoly closed forms") {
  UniformPrior uni(0.0, 1.0);
  CHECK(uni.monopoly().price == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(uni.monopoly().revenue == doctest::Approx(0.25).epsilon(1e-12));

  PointMassPrior point(1.0);
  CHECK(point.monopoly().price == 1.0);
  CHECK(point.monopoly().revenue == 1.0);

  // every price in [1, M] earns 1; the smallest maximizer convention picks 1
  EqualRevenuePrior er(100.0);
  CHECK(er.monopoly().price == 1.0);
  CHECK(er.monopoly().revenue == doctest::Approx(1.0).epsilon(1e-12));

  ExponentialPrior expo(2.0);
  CHECK(expo.monopoly().price == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(expo.monopoly().revenue == doctest::Approx(0.5 * std::exp(-1.0)).epsilon(1e-12));
}

TEST_CASE("partial expectations") {
  EqualRevenuePrior er(100.0);
  CHECK(er.partial_expectation(10.0) == doctest::Approx(std::log(10.0)).epsilon(1e-12));
  CHECK(er.partial_expectation(100.0) == doctest::Approx(std::log(100.0) + 1.0).epsilon(1e-12));
  CHECK(er.mean() == doctest::Approx(1.0 + std::log(100.0)).epsilon(1e-12));

  UniformPrior uni(0.0, 1.0);
  CHECK(uni.partial_expectation(1.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(uni.partial_expectation(0.5) == doctest::Approx(0.125).epsilon(1e-12));

  CHECK(two_point().partial_expectation(1.0) == doctest::Approx(0.5).epsilon(1e-12));

  ExponentialPrior expo(1.0);
  CHECK(expo.partial_expectation(1e9) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("strict CDF convention: survival includes the atom") {
  DiscretePrior d = two_point();
  CHECK(d.cdf_strict(1.0) == 0.0);
  CHECK(d.survival(1.0) == 1.0);
  CHECK(d.cdf_strict(2.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(d.survival(2.0) == doctest::Approx(0.5).epsilon(1e-12));
  for (std::size_t i = 0; i < d.size(); ++i)
    CHECK(d.cdf_strict(d.values()[i]) + d.survival_at(i) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("cdf_integral equals the expected positive part") {
  DiscretePrior d({0.5, 1.5, 4.0}, {0.25, 0.5, 0.25});
  for (double v : {0.0, 0.5, 1.0, 2.0, 5.0}) {
    double direct = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i)
      direct += d.probs()[i] * std::max(0.0, v - d.values()[i]);
    CHECK(d.cdf_integral(v) == doctest::Approx(direct).epsilon(1e-12));
  }
}

TEST_CASE("revenue curve") {
  RevenueCurve uni = revenue_curve(UniformPrior(0.0, 1.0), 201);
  CHECK(uni.opt == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(uni.q_star == doctest::Approx(0.5).epsilon(1e-9));

  RevenueCurve point = revenue_curve(PointMassPrior(1.0), 11);
  CHECK(point.opt == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(point.q_star == doctest::Approx(1.0).epsilon(1e-12));

  // two optimal prices: q = 0.5 at price 2 and q = 1 at price 1
  RevenueCurve tp = revenue_curve(two_point(), 11);
  CHECK(tp.opt == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(tp.q_star == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(tp.r_plus.back() == doctest::Approx(1.0).epsilon(1e-12));

  // r_plus is the running max of r, pointwise
  for (std::size_t i = 0; i < tp.q.size(); ++i) {
    double run = 0.0;
    for (std::size_t j = 0; j <= i; ++j) run = std::max(run, tp.r[j]);
    CHECK(tp.r_plus[i] == doctest::Approx(run).epsilon(1e-12));
  }
}

TEST_CASE("discretize") {
  DiscretePrior uni4 = discretize(UniformPrior(0.0, 1.0), 4);
  REQUIRE(uni4.size() == 4);
  CHECK(uni4.values()[0] == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(uni4.values()[3] == doctest::Approx(0.875).epsilon(1e-12));
  CHECK(uni4.probs()[1] == doctest::Approx(0.25).epsilon(1e-12));

  DiscretePrior merged = discretize(PointMassPrior(1.0), 3);
  REQUIRE(merged.size() == 1);
  CHECK(merged.values()[0] == 1.0);
  CHECK(merged.probs()[0] == doctest::Approx(1.0).epsilon(1e-12));

  DiscretePrior uni200 = discretize(UniformPrior(0.0, 1.0), 200);
  CHECK(uni200.monopoly().revenue == doctest::Approx(0.25).epsilon(0.01));

  CHECK_THROWS_AS(discretize(ExponentialPrior(1.0), 16), Error);
}

TEST_CASE("discretize preserves the mean for bounded support") {
  EqualRevenuePrior er(50.0);
  for (std::size_t n : {64, 256}) {
    DiscretePrior d = discretize(er, n);
    double width = er.support_max() - er.support_min();
    CHECK(std::abs(d.mean() - er.mean()) <= 2.0 / static_cast<double>(n) * width);
  }
  UniformPrior uni(0.5, 3.5);
  DiscretePrior d = discretize(uni, 32);
  CHECK(d.mean() == doctest::Approx(uni.mean()).epsilon(1e-12));
}

TEST_CASE("no price beats the monopoly revenue") {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 2 + static_cast<std::size_t>(canonical(gen) * 8);
    std::vector<double> values(n), probs(n);
    for (auto& v : values) v = 0.1 + 9.9 * canonical(gen);
    std::sort(values.begin(), values.end());
    for (std::size_t i = 1; i < n; ++i) values[i] = std::max(values[i], values[i - 1] + 1e-3);
    double sum = 0.0;
    for (auto& p : probs) sum += (p = 0.05 + canonical(gen));
    for (auto& p : probs) p /= sum;
    DiscretePrior d(values, probs);
    double opt = d.monopoly().revenue;
    for (int k = 0; k < 40; ++k) {
      double p = 11.0 * canonical(gen);
      CHECK(p * d.survival(p) <= opt + 1e-12);
    }
  }
}

TEST_CASE("discrete prior validation") {
  CHECK_THROWS_AS(DiscretePrior({2.0, 1.0}, {0.5, 0.5}), Error);          // unsorted
  CHECK_THROWS_AS(DiscretePrior({1.0, 2.0}, {0.5, -0.5}), Error);         // negative prob
  CHECK_THROWS_AS(DiscretePrior({1.0, 2.0}, {0.5, 0.4}), Error);          // bad sum
  CHECK_THROWS_AS(DiscretePrior({-1.0, 2.0}, {0.5, 0.5}), Error);         // negative value
  CHECK_NOTHROW(DiscretePrior({1.0, 2.0}, {0.5, 0.5 + 5e-10}));           // within parser slack
}

TEST_CASE("quantiles and inverse survival agree with closed forms") {
  EqualRevenuePrior er(100.0);
  CHECK(er.quantile(0.5) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(er.quantile(0.995) == doctest::Approx(100.0).epsilon(1e-12));  // atom at M
  CHECK(er.price_at_quantile(0.5) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(er.price_at_quantile(0.01) == doctest::Approx(100.0).epsilon(1e-12));

  UniformPrior uni(0.0, 1.0);
  CHECK(uni.price_at_quantile(0.25) == doctest::Approx(0.75).epsilon(1e-12));

  DiscretePrior d = two_point();
  CHECK(d.quantile(0.25) == 1.0);
  CHECK(d.quantile(0.75) == 2.0);
  CHECK(d.price_at_quantile(0.5) == 2.0);
  CHECK(d.price_at_quantile(0.6) == 1.0);
}
