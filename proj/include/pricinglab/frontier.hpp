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
#include <string>
#include <vector>

namespace pricinglab {

/// A point on the consistency-robustness plane. beta_argmin is the interior
/// minimizer of the scan objective, or +inf when the infimum is only attained
/// in a boundary limit.
struct FrontierPoint {
  double c = 0.0;
  double r = 0.0;
  double beta_argmin = 0.0;
};

/// g(beta; C) = (1 + beta) - C (beta + beta^2) ln(1 + 1/beta), the scalar
/// objective whose infimum over beta > 0 is the best robustness under
/// C-consistency. log1p is used for large beta to avoid cancellation.
double dual_objective(double beta, double c);

/// R*(C): coarse log-spaced scan of dual_objective over (0, beta_max],
/// golden-section refinement, then the minimum against the boundary limits
/// (1 at beta -> 0 for every C; 1 - C/2 at beta -> inf, finite only at C = 1).
FrontierPoint r_star(double c, double beta_max = 1e6);

/// The symmetric tradeoff C = R*(C), located by bisection; the root is unique
/// because C - R*(C) is increasing.
FrontierPoint symmetric_point();

/// Guarantee of randomizing between posting the signal and posting the
/// monopoly price: (C, 1 - C).
FrontierPoint baseline(double c);

std::vector<FrontierPoint> frontier_sweep(double c_min, double c_max, std::size_t steps);

/// CSV body with header "C,R_star,beta_argmin,baseline_R", 12 significant
/// digits, one row per sweep point.
std::string frontier_sweep_csv(double c_min, double c_max, std::size_t steps);

}  // namespace pricinglab
