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

#include "pricinglab/worstcase.hpp"

#include <algorithm>
#include <cmath>

#include "pricinglab/errors.hpp"
#include "pricinglab/frontier.hpp"
#include "pricinglab/lp.hpp"

namespace pricinglab {

namespace {

void check_consistency(double c) {
  if (!(c >= 0.0 && c <= 1.0)) throw_invalid("consistency must lie in [0, 1]");
}

}  // namespace

StepFunction::StepFunction(std::vector<double> knots, std::vector<double> levels)
    : knots_(std::move(knots)), levels_(std::move(levels)) {
  if (knots_.size() != levels_.size() + 1 || levels_.empty())
    throw_invalid("step function needs knots.size() == levels.size() + 1 >= 2");
  if (knots_.front() != 0.0) throw_invalid("step function must start at 0");
  for (std::size_t i = 1; i < knots_.size(); ++i)
    if (!(knots_[i] > knots_[i - 1])) throw_invalid("step function knots must ascend");
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (!(levels_[i] >= 0.0)) throw_invalid("step function levels must be nonnegative");
    if (i > 0 && levels_[i] > levels_[i - 1] + 1e-12)
      throw_invalid("step function must be nonincreasing");
  }
}

double StepFunction::value(double v) const {
  if (v < 0.0 || v >= knots_.back()) return 0.0;
  auto it = std::upper_bound(knots_.begin(), knots_.end(), v);
  std::size_t idx = static_cast<std::size_t>(it - knots_.begin());
  return levels_[idx - 1];
}

double StepFunction::integral(double lo, double hi) const {
  if (hi <= lo) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    double a = std::max(lo, knots_[i]);
    double b = std::min(hi, knots_[i + 1]);
    if (b > a) total += levels_[i] * (b - a);
  }
  return total;
}

double StepFunction::integral_from(double v) const { return integral(v, knots_.back()); }

Thresholds compute_thresholds(const EnvelopeParams& params, double c) {
  check_consistency(c);
  const StepFunction& beta = params.beta;
  const double t = params.t;
  if (!(t > 0.0)) throw_invalid("compute_thresholds needs T > 0");
  if (!(beta.front_level() > 0.0))
    throw_invalid("compute_thresholds: beta must be positive at 0");

  // v_low: last v with B(v) = eta + int_v^U beta >= T. B is piecewise linear
  // and nonincreasing, so walk the knots.
  const auto& knots = beta.knots();
  const auto& levels = beta.levels();
  double b0 = params.eta + beta.integral_from(0.0);
  if (b0 < t) throw_invalid("compute_thresholds: B(0) < T, benchmark unreachable");
  double v_low = knots.back();
  if (params.eta >= t) {
    v_low = knots.back();  // B stays >= T through the whole domain
  } else {
    double b_right = params.eta;  // B at knots.back()
    for (std::size_t i = levels.size(); i-- > 0;) {
      double b_left = b_right + levels[i] * (knots[i + 1] - knots[i]);
      if (b_left >= t) {
        // crossing inside [knots[i], knots[i+1]): B(v) = b_right + level (k_{i+1} - v)
        v_low = levels[i] > 0.0 ? knots[i + 1] - (t - b_right) / levels[i] : knots[i + 1];
        v_low = std::min(std::max(v_low, knots[i]), knots[i + 1]);
        break;
      }
      b_right = b_left;
    }
  }

  // v_high: first v where beta(v) < (1 - C) beta(0); beta jumps to 0 at U.
  double threshold = (1.0 - c) * beta.front_level();
  double v_high = knots.back();
  if (threshold <= 0.0) {
    // C = 1: beta never drops below 0 before U; past U it equals the
    // threshold, never strictly below. The corner is meaningful only with
    // eta == 0, where the envelope closes at U anyway.
    if (params.eta > 0.0)
      throw_invalid("compute_thresholds: v_high undefined at C = 1 with eta > 0");
    v_high = knots.back();
  } else {
    for (std::size_t i = 0; i < levels.size(); ++i) {
      if (levels[i] < threshold) {
        v_high = knots[i];
        break;
      }
    }
  }
  if (v_low > v_high + 1e-12 * std::max(1.0, v_high))
    throw_invalid("compute_thresholds: threshold ordering violated");
  return {v_low, std::max(v_high, v_low)};
}

PiecewisePrior envelope_distribution(const EnvelopeParams& params, double c) {
  Thresholds th = compute_thresholds(params, c);
  const double t = params.t;
  if (th.v_low < t - 1e-12 * std::max(1.0, t))
    throw_invalid("envelope_distribution: v_low below the benchmark");

  std::vector<double> knots{0.0};
  std::vector<PiecewisePrior::Piece> pieces;
  auto push_piece = [&](double hi, PiecewisePrior::Piece piece) {
    if (hi - knots.back() <= 1e-14 * std::max(1.0, hi)) return;
    knots.push_back(hi);
    pieces.push_back(piece);
  };
  push_piece(t, {0.0, 1.0});                       // revenue v below the benchmark price
  push_piece(std::min(th.v_low, th.v_high), {t, 0.0});  // flat revenue T
  // envelope piece: revenue B(v), linear with slope -level on each beta cell
  const auto& bk = params.beta.knots();
  const auto& bl = params.beta.levels();
  for (std::size_t i = 0; i < bl.size(); ++i) {
    double lo = std::max(bk[i], th.v_low);
    double hi = std::min(bk[i + 1], th.v_high);
    if (hi <= lo) continue;
    double b_hi = params.eta + params.beta.integral_from(hi);
    // B(v) = b_hi + level (hi - v) on [lo, hi)
    push_piece(hi, {b_hi + bl[i] * hi, -bl[i]});
  }
  if (th.v_high > knots.back()) {
    double b_tail = params.eta + params.beta.integral_from(knots.back());
    push_piece(th.v_high, {b_tail, 0.0});  // flat stretch when beta is 0 there
  }
  return PiecewisePrior(std::move(knots), std::move(pieces));
}

PiecewisePrior f_beta(double t, double beta) {
  if (!(t > 0.0) || !(beta > 0.0)) throw_invalid("f_beta needs T > 0 and beta > 0");
  double v_high = t + t / beta;
  return PiecewisePrior({0.0, t, v_high}, {{0.0, 1.0}, {t * (1.0 + beta), -beta}});
}

EtaElimination eliminate_eta(const EnvelopeParams& params, double c) {
  double level = (1.0 - c) * params.beta.front_level();
  if (level <= 0.0) {
    // At C = 1 the extension level vanishes, so eta has nowhere to fold;
    // keep the pair as-is unless eta is already zero (then the form is
    // final: the envelope closes at U on its own).
    if (params.eta > 1e-14 * std::max(1.0, params.t)) return {params, false};
    return {{params.t, 0.0, params.beta}, true};
  }
  Thresholds th = compute_thresholds(params, c);
  double folded = params.eta + params.beta.integral_from(th.v_high);
  double u_tilde = th.v_high + folded / level;
  std::vector<double> knots{0.0}, levels;
  const auto& bk = params.beta.knots();
  const auto& bl = params.beta.levels();
  for (std::size_t i = 0; i < bl.size() && bk[i] < th.v_high; ++i) {
    double hi = std::min(bk[i + 1], th.v_high);
    if (hi - knots.back() <= 0.0) continue;
    knots.push_back(hi);
    levels.push_back(bl[i]);
  }
  if (u_tilde > knots.back()) {
    knots.push_back(u_tilde);
    levels.push_back(level);
  }
  return {{params.t, 0.0, StepFunction(std::move(knots), std::move(levels))}, true};
}

EnvelopeParams step_reduce(const EnvelopeParams& params, double c) {
  if (params.eta != 0.0) throw_invalid("step_reduce requires eta == 0");
  Thresholds th = compute_thresholds(params, c);
  double level = params.beta.value(th.v_low);
  if (!(level > 0.0)) throw_invalid("step_reduce: beta(v_low) == 0");
  double u_hat = th.v_low + params.t / level;
  return {params.t, 0.0, StepFunction({0.0, u_hat}, {level})};
}

double dual_objective_eval(const Prior& prior, const EnvelopeParams& params, double c) {
  check_consistency(c);
  const auto& knots = params.beta.knots();
  const auto& levels = params.beta.levels();
  // int beta(v) F(v) dv: beta is constant per cell, so each cell contributes
  // level * (int_0^hi F - int_0^lo F), exact via the prior's CDF integral.
  double integral = 0.0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i] == 0.0) continue;
    integral += levels[i] * (prior.cdf_integral(knots[i + 1]) - prior.cdf_integral(knots[i]));
  }
  return (1.0 - c) * prior.mean() * params.beta.front_level() + integral + params.eta;
}

DiscretePrior discretize_peak_anchored(const PiecewisePrior& prior, std::size_t grid_n) {
  if (grid_n < 2) throw_invalid("discretize_peak_anchored needs grid_n >= 2");
  std::vector<double> values, probs;
  values.reserve(grid_n);
  probs.reserve(grid_n);
  const double mass = 1.0 / static_cast<double>(grid_n);
  // cell 0 sits at the revenue peak (the support minimum); the remaining
  // cells at quantile midpoints
  values.push_back(prior.support_min());
  probs.push_back(mass);
  for (std::size_t i = 1; i < grid_n; ++i) {
    double v = prior.quantile((static_cast<double>(i) + 0.5) * mass);
    if (v - values.back() <= 1e-12 * std::max(1.0, std::abs(v))) {
      probs.back() += mass;
    } else {
      values.push_back(v);
      probs.push_back(mass);
    }
  }
  return DiscretePrior(std::move(values), std::move(probs));
}

TightnessReport tightness_check(double c, double beta, double t, std::size_t grid_n) {
  check_consistency(c);
  if (grid_n < 50) throw_invalid("tightness_check needs grid_n >= 50");
  PiecewisePrior adversarial = f_beta(t, beta);
  DiscretePrior grid = discretize_peak_anchored(adversarial, grid_n);

  TightnessReport report;
  report.c = c;
  report.beta = beta;
  report.t = t;
  report.grid_n = grid_n;
  report.rev = solve_rev_posted(grid, c).rev;
  report.rev_ratio = report.rev / t;
  report.r_star_lower = r_star(c).r;
  report.dual_upper = dual_objective(beta, c);
  report.delta = (1.0 + 1.0 / beta) / static_cast<double>(grid_n);
  return report;
}

}  // namespace pricinglab
