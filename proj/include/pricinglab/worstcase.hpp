#pragma once
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

#include <cstddef>
#include <vector>

#include "pricinglab/prior.hpp"

namespace pricinglab {

/// Nonincreasing right-continuous step function on [0, inf): levels[i] on
/// [knots[i], knots[i+1]), zero from the last knot on. knots.front() == 0.
class StepFunction {
 public:
  StepFunction(std::vector<double> knots, std::vector<double> levels);

  double value(double v) const;
  /// integral_v^inf of the step function
  double integral_from(double v) const;
  double integral(double lo, double hi) const;

  double front_level() const { return levels_.empty() ? 0.0 : levels_.front(); }
  double domain_end() const { return knots_.back(); }  // U, where the value hits 0
  const std::vector<double>& knots() const { return knots_; }
  const std::vector<double>& levels() const { return levels_; }

 private:
  std::vector<double> knots_;
  std::vector<double> levels_;
};

/// Certificate data for the adversarial construction: revenue target T,
/// constant eta >= 0, and the step function beta with beta(U) = 0.
struct EnvelopeParams {
  double t = 1.0;
  double eta = 0.0;
  StepFunction beta;
};

struct Thresholds {
  double v_low = 0.0;   // last v with eta + int_v^U beta >= T
  double v_high = 0.0;  // first v where beta drops below (1 - C) beta(0)
};

/// B(v) = eta + int_v^U beta is piecewise linear; the thresholds come from
/// exact piece walks. Fails when beta == 0, when B never reaches T, or in the
/// C = 1, eta > 0 corner where v_high is undefined.
Thresholds compute_thresholds(const EnvelopeParams& params, double c);

/// The minimizing prior for fixed (eta, beta): revenue curve saturating
/// min{v, T, B(v)} below v_high, all remaining mass at v_high.
PiecewisePrior envelope_distribution(const EnvelopeParams& params, double c);

/// The tight family: revenue curve v up to T, then T - beta (v - T) down to
/// zero at v_high = T + T / beta. Its monopoly revenue is exactly T.
PiecewisePrior f_beta(double t, double beta);

struct EtaElimination {
  EnvelopeParams params;
  bool applied = false;  // false when the C = 1 guard kept eta in place
};

/// Folds eta into an extended step at level (1 - C) beta(0) past v_high,
/// preserving the objective against the induced worst-case prior. At C = 1
/// the extension level vanishes; unless the folded mass is zero the operation
/// falls back to returning the input unchanged.
EtaElimination eliminate_eta(const EnvelopeParams& params, double c);

/// Replaces beta by the single step at level beta(v_low) on
/// [0, v_low + T / beta(v_low)), never increasing the objective against the
/// induced worst-case prior. Requires eta == 0.
EnvelopeParams step_reduce(const EnvelopeParams& params, double c);

/// (1 - C) E[s] beta(0) + int beta(v) F(v) dv + eta, integrated exactly over
/// the step breakpoints and the prior's CDF pieces.
double dual_objective_eval(const Prior& prior, const EnvelopeParams& params, double c);

/// Quantile-midpoint discretization of f_beta with the first cell pinned to
/// the revenue peak at T, so the discrete monopoly revenue is exactly T.
DiscretePrior discretize_peak_anchored(const PiecewisePrior& prior, std::size_t grid_n);

struct TightnessReport {
  double c = 0.0;
  double beta = 0.0;
  double t = 0.0;
  std::size_t grid_n = 0;
  double rev = 0.0;        // LP optimum on the discretized adversarial prior
  double rev_ratio = 0.0;  // rev / T
  double r_star_lower = 0.0;
  double dual_upper = 0.0;  // g(beta; C), before capping at 1
  double delta = 0.0;       // reported grid tolerance, O(1/grid_n)
};

/// Two-sided sandwich: discretize f_beta, solve the posted-price program,
/// and report r_star(C) and g(beta; C) as the lower/upper references.
TightnessReport tightness_check(double c, double beta, double t, std::size_t grid_n);

}  // namespace pricinglab
