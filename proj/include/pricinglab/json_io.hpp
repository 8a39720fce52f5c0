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

#include "pricinglab/lp.hpp"
#include "pricinglab/mechanisms.hpp"
#include "pricinglab/prior.hpp"
#include "pricinglab/worstcase.hpp"

namespace pricinglab {

/// Parses the prior JSON schema:
///   {"type":"discrete","values":[...],"probs":[...]}
///   {"type":"uniform","lo":0,"hi":1}
///   {"type":"exponential","rate":1}
///   {"type":"equal_revenue","truncation":100}
///   {"type":"point_mass","value":1}
PriorPtr parse_prior_json(const std::string& text);

/// Accepts the shorthands uniform01, exp:RATE, er:M, point:V, or inline JSON.
PriorPtr parse_prior_spec(const std::string& text);

std::string prior_to_json(const Prior& prior);

/// {"C":..,"rev":..,"x":[..],"p":[..]}
std::string mechanism_solution_to_json(const MechanismSolution& sol);
/// {"eta":..,"beta":[..],"objective":..}
std::string dual_certificate_to_json(const DualCertificate& cert);
/// Combined solve output with the duality gap.
std::string rev_bundle_to_json(const MechanismSolution& sol, const PriceLottery& lottery,
                               const DualCertificate& dual, double gap);
/// {"mechanism":..,"C":..,"R":..,"rev":..,"opt":..,"aux":{..}}
std::string tradeoff_report_to_json(const TradeoffReport& report);

/// {"T":..,"eta":..,"beta":[[knot,level],...],"U":..} with a terminal
/// [U, 0] pair.
std::string envelope_params_to_json(const EnvelopeParams& params);
EnvelopeParams envelope_params_from_json(const std::string& text);

std::string tightness_report_to_json(const TightnessReport& report);

/// All numeric output is printed with 12 significant digits.
std::string format_number(double x);

}  // namespace pricinglab
