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

#include <string>
#include <utility>
#include <vector>

#include "pricinglab/prior.hpp"

namespace pricinglab {

/// Consistency/robustness pair achieved by a concrete mechanism, with the
/// hallucinatory-regime revenue and the monopoly benchmark that produced it.
/// R always equals hallucinatory_rev / opt; mechanisms whose exact revenue
/// exceeds the guarantee they promise report the extras under aux.
struct TradeoffReport {
  std::string mechanism;
  double c = 0.0;
  double r = 0.0;
  double hallucinatory_rev = 0.0;
  double opt = 0.0;
  std::vector<std::pair<std::string, double>> aux;
};

/// Calibration data for the heavy-tail mechanism: cut points a < b with
/// q_a = P[V < a], m_a = E[v 1{v <= a}], solving
///   eps (m(b) - m(a)) = m(a) - q_a p*.
/// When b lands on an atom the atom's transfer weight is split and flagged.
struct HeavyTailParams {
  double eps = 0.0;
  double a = 0.0;
  double b = 0.0;
  double q_a = 0.0;
  double m_a = 0.0;
  double atom_split_weight = 1.0;
  bool atom_adjusted = false;
};

/// Revenue-maximizing price at least s (smallest maximizer).
double p_plus(const Prior& prior, double s);

/// Hidden default price p_plus(signal) with a discount to the signal on a
/// correct guess: perfectly consistent, revenue E_s[p+(s) P[V >= p+(s)]].
TradeoffReport guess_discount_eval(const Prior& prior);

/// Hidden affine price C s + p* - C mu with a correct-guess discount to C s:
/// min(p*/mu, 1)-consistent and fully robust.
TradeoffReport hidden_price_eval(const Prior& prior);

HeavyTailParams heavy_tail_params(const Prior& prior, double eps);
TradeoffReport heavy_tail_eval(const Prior& prior, const HeavyTailParams& params);

/// Post the signal with probability lambda, else the monopoly price. The
/// guaranteed pair is (lambda, 1 - lambda); the exact hallucinatory revenue
/// is reported under aux.
TradeoffReport public_baseline_eval(const Prior& prior, double lambda);

}  // namespace pricinglab
