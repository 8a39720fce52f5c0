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

#include <doctest.h>

#include "pricinglab/errors.hpp"
#include "pricinglab/frontier.hpp"
#include "pricinglab/lp.hpp"
#include "pricinglab/mechanisms.hpp"
#include "pricinglab/prior.hpp"
#include "pricinglab/verify.hpp"
#include "pricinglab/worstcase.hpp"

using namespace pricinglab;

namespace {

double aux_value(const TradeoffReport& report, const std::string& key) {
  for (const auto& [k, v] : report.aux)
    if (k == key) return v;
  FAIL("missing aux key: " << key);
  return 0.0;
}

/// Quadrature oracle for the hidden-default-price revenue of a continuous
/// prior: integrate the running max of the revenue curve over quantiles.
double guess_discount_quadrature(const Prior& prior, std::size_t panels) {
  double total = 0.0;
  for (std::size_t k = 0; k < panels; ++k) {
    double q = (static_cast<double>(k) + 0.5) / static_cast<double>(panels);
    double best = 0.0;
    // running max over t <= q on a nested grid
    for (std::size_t j = 0; j <= 64; ++j) {
      double t = q * static_cast<double>(j) / 64.0;
      if (t > 0.0) best = std::max(best, t * prior.price_at_quantile(t));
    }
    total += best / static_cast<double>(panels);
  }
  return total;
}

}  // namespace

TEST_CASE("p_plus: revenue-maximizing price above the signal") {
  UniformPrior uni(0.0, 1.0);
  CHECK(p_plus(uni, 0.2) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(p_plus(uni, 0.7) == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(p_plus(PointMassPrior(1.0), 0.3) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p_plus(PointMassPrior(1.0), 1.5) == doctest::Approx(1.5).epsilon(1e-12));  // zero revenue
  EqualRevenuePrior er(100.0);
  CHECK(p_plus(er, 0.5) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p_plus(er, 7.0) == doctest::Approx(7.0).epsilon(1e-12));  // plateau, smallest maximizer
  DiscretePrior tp({1.0, 2.0}, {0.5, 0.5});
  CHECK(p_plus(tp, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p_plus(tp, 1.5) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(p_plus(uni, -1.0), Error);
}

TEST_CASE("guess-for-discount closed forms") {
  TradeoffReport uni = guess_discount_eval(UniformPrior(0.0, 1.0));
  CHECK(uni.c == 1.0);
  CHECK(uni.hallucinatory_rev == doctest::Approx(5.0 / 24.0).epsilon(1e-12));
  CHECK(uni.r == doctest::Approx(5.0 / 6.0).epsilon(1e-12));

  TradeoffReport point = guess_discount_eval(PointMassPrior(1.0));
  CHECK(point.hallucinatory_rev == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(point.r == doctest::Approx(1.0).epsilon(1e-12));

  TradeoffReport er = guess_discount_eval(EqualRevenuePrior(50.0));
  CHECK(er.r == doctest::Approx(1.0).epsilon(1e-12));

  TradeoffReport expo = guess_discount_eval(ExponentialPrior(1.0));
  double expected = std::exp(-1.0) - 0.25 * std::exp(-2.0);
  CHECK(expo.hallucinatory_rev == doctest::Approx(expected).epsilon(1e-12));
  CHECK(expo.r == doctest::Approx(expected / std::exp(-1.0)).epsilon(1e-12));

  // quadrature oracle agrees for the continuous families
  CHECK(guess_discount_quadrature(UniformPrior(0.0, 1.0), 4000) ==
        doctest::Approx(5.0 / 24.0).epsilon(2e-3));
  CHECK(guess_discount_quadrature(ExponentialPrior(1.0), 4000) ==
        doctest::Approx(expected).epsilon(2e-3));
}

TEST_CASE("guess-for-discount beats half the benchmark everywhere") {
  auto corpus = make_corpus(5, 40);
  for (const auto& prior : corpus) {
    TradeoffReport rep = guess_discount_eval(prior);
    double q_star = revenue_curve(prior, 64).q_star;
    CHECK(rep.r >= 1.0 - 0.5 * q_star - 1e-9);
    CHECK(rep.r >= 0.5 - 1e-9);
    CHECK(rep.r <= 1.0 + 1e-9);
  }
  // the adversarial triangular family also clears the bound
  PiecewisePrior fb = f_beta(1.0, 1.0);
  TradeoffReport rep = guess_discount_eval(fb);
  CHECK(rep.r >= 0.5 - 1e-9);
  double q_star = revenue_curve(fb, 512).q_star;
  CHECK(rep.r >= 1.0 - 0.5 * q_star - 1e-6);
}

TEST_CASE("hidden affine price: perfect robustness") {
  TradeoffReport uni = hidden_price_eval(UniformPrior(0.0, 1.0));
  CHECK(uni.c == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(uni.r == doctest::Approx(1.0).epsilon(1e-12));

  TradeoffReport expo = hidden_price_eval(ExponentialPrior(1.0));
  CHECK(expo.c == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(expo.r == doctest::Approx(1.0).epsilon(1e-12));

  TradeoffReport er = hidden_price_eval(EqualRevenuePrior(100.0));
  CHECK(er.c == doctest::Approx(1.0 / (1.0 + std::log(100.0))).epsilon(1e-12));
  CHECK(er.r == 1.0);
  // default price is C s + p* - C mu
  CHECK(aux_value(er, "price_slope") == doctest::Approx(er.c).epsilon(1e-12));
  CHECK(aux_value(er, "price_intercept") ==
        doctest::Approx(1.0 - er.c * (1.0 + std::log(100.0))).epsilon(1e-12));

  CHECK_THROWS_AS(hidden_price_eval(PointMassPrior(0.0)), Error);
}

TEST_CASE("heavy-tail calibration on the truncated equal-revenue family") {
  EqualRevenuePrior er(3e7);
  HeavyTailParams params = heavy_tail_params(er, 0.1);
  CHECK(params.a == doctest::Approx(10.5).epsilon(1e-12));
  CHECK(params.q_a == doctest::Approx(1.0 - 1.0 / 10.5).epsilon(1e-12));
  CHECK(params.m_a == doctest::Approx(std::log(10.5)).epsilon(1e-12));
  // b solves eps (ln b - ln a) = m(a) - q(a) p*
  double expected_b = std::exp(std::log(10.5) + (params.m_a - params.q_a) / 0.1);
  CHECK(params.b == doctest::Approx(expected_b).epsilon(1e-9));
  CHECK(params.b <= 3e7);
  double identity =
      0.1 * (er.partial_expectation(params.b) - params.m_a) - (params.m_a - params.q_a * 1.0);
  CHECK(std::abs(identity) <= 1e-8);

  TradeoffReport rep = heavy_tail_eval(er, params);
  CHECK(rep.c == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(rep.r == doctest::Approx(params.q_a).epsilon(1e-12));
  CHECK(std::min(rep.c, rep.r) >= 0.9 - 1e-12);

  HeavyTailParams half = heavy_tail_params(er, 0.5);
  TradeoffReport rep_half = heavy_tail_eval(er, half);
  CHECK(rep_half.c == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rep_half.r > 0.5);
}

TEST_CASE("heavy-tail infeasibility") {
  CHECK_THROWS_WITH_AS(heavy_tail_params(UniformPrior(0.0, 1.0), 0.1),
                       "insufficient tail mass", Error);
  CHECK_THROWS_AS(heavy_tail_params(EqualRevenuePrior(100.0), 1.0), Error);   // eps = 1 rejected
  CHECK_THROWS_AS(heavy_tail_params(EqualRevenuePrior(100.0), 0.0), Error);
  // truncation too low for the requested eps: b would leave the support
  CHECK_THROWS_WITH_AS(heavy_tail_params(EqualRevenuePrior(100.0), 0.01),
                       "insufficient tail mass", Error);
}

TEST_CASE("heavy-tail atom splitting on discrete priors") {
  // a geometric equal-revenue-style support: every price earns 1, the mass
  // past a sits on atoms, so exact calibration must split the atom at b
  DiscretePrior d({1.0, 2.0, 4.0, 8.0, 16.0, 32.0},
                  {0.5, 0.25, 0.125, 0.0625, 0.03125, 0.03125});
  double pstar = d.monopoly().price;
  CHECK(pstar == 1.0);
  HeavyTailParams params = heavy_tail_params(d, 0.4);
  CHECK(params.a == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(params.q_a > 0.6);
  CHECK(params.m_a > params.q_a * pstar);
  CHECK(params.b == doctest::Approx(8.0).epsilon(1e-9));
  CHECK(params.atom_adjusted);
  CHECK(params.atom_split_weight == doctest::Approx(0.25).epsilon(1e-8));
  double contribution =
      d.partial_expectation(std::nextafter(params.b, 0.0)) - params.m_a +
      params.atom_split_weight *
          (d.partial_expectation(params.b) - d.partial_expectation(std::nextafter(params.b, 0.0)));
  CHECK(params.eps * contribution ==
        doctest::Approx(params.m_a - params.q_a * pstar).epsilon(1e-8));
}

TEST_CASE("public baseline") {
  UniformPrior uni(0.0, 1.0);
  TradeoffReport full = public_baseline_eval(uni, 1.0);
  CHECK(full.c == 1.0);
  CHECK(full.r == 0.0);
  CHECK(aux_value(full, "exact_hallucinatory_rev") == doctest::Approx(1.0 / 6.0).epsilon(1e-12));

  TradeoffReport none = public_baseline_eval(uni, 0.0);
  CHECK(none.c == 0.0);
  CHECK(none.r == 1.0);
  CHECK(none.hallucinatory_rev == doctest::Approx(0.25).epsilon(1e-12));

  TradeoffReport half = public_baseline_eval(uni, 0.5);
  CHECK(half.c + half.r == doctest::Approx(1.0).epsilon(1e-12));

  // the optimal frontier dominates the baseline guarantee everywhere
  for (double lambda : {0.0, 0.25, 0.5, 0.75, 1.0})
    CHECK(r_star(lambda).r >= public_baseline_eval(uni, lambda).r - 1e-12);

  CHECK_THROWS_AS(public_baseline_eval(uni, 1.5), Error);
}

TEST_CASE("exact posted-signal revenue for each family") {
  CHECK(aux_value(public_baseline_eval(ExponentialPrior(2.0), 0.5), "posted_signal_rev") ==
        doctest::Approx(0.125).epsilon(1e-12));
  CHECK(aux_value(public_baseline_eval(EqualRevenuePrior(100.0), 0.5), "posted_signal_rev") ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(aux_value(public_baseline_eval(PointMassPrior(2.0), 0.5), "posted_signal_rev") ==
        doctest::Approx(2.0).epsilon(1e-12));
  DiscretePrior tp({1.0, 2.0}, {0.5, 0.5});
  CHECK(aux_value(public_baseline_eval(tp, 0.5), "posted_signal_rev") ==
        doctest::Approx(0.5 * 1.0 * 1.0 + 0.5 * 2.0 * 0.5).epsilon(1e-12));
}

TEST_CASE("the optimum dominates the perfectly consistent mechanism") {
  auto corpus = make_corpus(3, 12);
  for (const auto& prior : corpus) {
    double lp_rev = solve_rev_posted(prior, 1.0).rev;
    CHECK(guess_discount_eval(prior).hallucinatory_rev <= lp_rev + 1e-7);
  }
}
