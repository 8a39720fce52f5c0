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

#include "pricinglab/json_io.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "pricinglab/errors.hpp"

namespace pricinglab {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw_parse("malformed JSON");
  return j;
}

double require_number(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) throw_parse(std::string("missing number: ") + key);
  return j[key].get<double>();
}

std::vector<double> require_array(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw_parse(std::string("missing array: ") + key);
  std::vector<double> out;
  for (const auto& v : j[key]) {
    if (!v.is_number()) throw_parse(std::string("non-numeric entry in ") + key);
    out.push_back(v.get<double>());
  }
  return out;
}

std::string join_numbers(const std::vector<double>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += format_number(xs[i]);
  }
  return out + "]";
}

}  // namespace

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

PriorPtr parse_prior_json(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    throw_parse("prior JSON needs a \"type\" tag");
  std::string type = j["type"].get<std::string>();
  try {
    if (type == "discrete") {
      auto values = require_array(j, "values");
      auto probs = require_array(j, "probs");
      return std::make_shared<DiscretePrior>(std::move(values), std::move(probs));
    }
    if (type == "uniform")
      return std::make_shared<UniformPrior>(require_number(j, "lo"), require_number(j, "hi"));
    if (type == "exponential")
      return std::make_shared<ExponentialPrior>(require_number(j, "rate"));
    if (type == "equal_revenue")
      return std::make_shared<EqualRevenuePrior>(require_number(j, "truncation"));
    if (type == "point_mass")
      return std::make_shared<PointMassPrior>(require_number(j, "value"));
  } catch (const Error& e) {
    if (e.kind() == Error::Kind::invalid_argument) throw_parse(e.what());
    throw;
  }
  throw_parse("unknown prior type: " + type);
}

PriorPtr parse_prior_spec(const std::string& text) {
  if (text == "uniform01") return std::make_shared<UniformPrior>(0.0, 1.0);
  auto tail_number = [&](std::size_t prefix_len) {
    try {
      return std::stod(text.substr(prefix_len));
    } catch (const std::exception&) {
      throw_parse("bad numeric parameter in prior shorthand: " + text);
    }
  };
  try {
    if (text.rfind("exp:", 0) == 0) return std::make_shared<ExponentialPrior>(tail_number(4));
    if (text.rfind("er:", 0) == 0) return std::make_shared<EqualRevenuePrior>(tail_number(3));
    if (text.rfind("point:", 0) == 0) return std::make_shared<PointMassPrior>(tail_number(6));
  } catch (const Error& e) {
    if (e.kind() == Error::Kind::invalid_argument) throw_parse(e.what());
    throw;
  }
  if (!text.empty() && text.front() == '{') return parse_prior_json(text);
  throw_parse("unrecognized prior spec: " + text);
}

std::string prior_to_json(const Prior& prior) {
  std::string family = prior.family();
  if (const auto* d = dynamic_cast<const DiscretePrior*>(&prior)) {
    return "{\"type\":\"discrete\",\"values\":" + join_numbers(d->values()) +
           ",\"probs\":" + join_numbers(d->probs()) + "}";
  }
  if (const auto* u = dynamic_cast<const UniformPrior*>(&prior)) {
    return "{\"type\":\"uniform\",\"lo\":" + format_number(u->lo()) +
           ",\"hi\":" + format_number(u->hi()) + "}";
  }
  if (const auto* e = dynamic_cast<const ExponentialPrior*>(&prior)) {
    return "{\"type\":\"exponential\",\"rate\":" + format_number(e->rate()) + "}";
  }
  if (const auto* er = dynamic_cast<const EqualRevenuePrior*>(&prior)) {
    return "{\"type\":\"equal_revenue\",\"truncation\":" + format_number(er->truncation()) + "}";
  }
  if (const auto* p = dynamic_cast<const PointMassPrior*>(&prior)) {
    return "{\"type\":\"point_mass\",\"value\":" + format_number(p->value()) + "}";
  }
  const auto& pw = dynamic_cast<const PiecewisePrior&>(prior);
  std::string out = "{\"type\":\"piecewise\",\"knots\":" + join_numbers(pw.knots()) +
                    ",\"revenue_pieces\":[";
  for (std::size_t j = 0; j < pw.pieces().size(); ++j) {
    if (j) out += ",";
    out += "[" + format_number(pw.pieces()[j].a) + "," + format_number(pw.pieces()[j].b) + "]";
  }
  return out + "]}";
}

std::string mechanism_solution_to_json(const MechanismSolution& sol) {
  return "{\"C\":" + format_number(sol.c) + ",\"rev\":" + format_number(sol.rev) +
         ",\"x\":" + join_numbers(sol.x) + ",\"p\":" + join_numbers(sol.p) + "}";
}

std::string dual_certificate_to_json(const DualCertificate& cert) {
  return "{\"eta\":" + format_number(cert.eta) + ",\"beta\":" + join_numbers(cert.beta) +
         ",\"objective\":" + format_number(cert.objective) + "}";
}

std::string rev_bundle_to_json(const MechanismSolution& sol, const PriceLottery& lottery,
                               const DualCertificate& dual, double gap) {
  return "{\"C\":" + format_number(sol.c) + ",\"rev\":" + format_number(sol.rev) +
         ",\"x\":" + join_numbers(sol.x) + ",\"p\":" + join_numbers(sol.p) +
         ",\"lottery\":{\"prices\":" + join_numbers(lottery.prices) +
         ",\"masses\":" + join_numbers(lottery.masses) +
         ",\"rev\":" + format_number(lottery.rev) +
         "},\"dual\":" + dual_certificate_to_json(dual) +
         ",\"duality_gap\":" + format_number(gap) + "}";
}

std::string tradeoff_report_to_json(const TradeoffReport& report) {
  std::string out = "{\"mechanism\":\"" + report.mechanism + "\",\"C\":" + format_number(report.c) +
                    ",\"R\":" + format_number(report.r) +
                    ",\"rev\":" + format_number(report.hallucinatory_rev) +
                    ",\"opt\":" + format_number(report.opt) + ",\"aux\":{";
  for (std::size_t i = 0; i < report.aux.size(); ++i) {
    if (i) out += ",";
    out += "\"" + report.aux[i].first + "\":" + format_number(report.aux[i].second);
  }
  return out + "}}";
}

std::string envelope_params_to_json(const EnvelopeParams& params) {
  std::string out = "{\"T\":" + format_number(params.t) + ",\"eta\":" + format_number(params.eta) +
                    ",\"beta\":[";
  const auto& knots = params.beta.knots();
  const auto& levels = params.beta.levels();
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (i) out += ",";
    out += "[" + format_number(knots[i]) + "," + format_number(levels[i]) + "]";
  }
  out += (levels.empty() ? std::string("") : std::string(",")) + "[" +
         format_number(knots.back()) + ",0]";
  return out + "],\"U\":" + format_number(params.beta.domain_end()) + "}";
}

EnvelopeParams envelope_params_from_json(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object() || !j.contains("beta") || !j["beta"].is_array())
    throw_parse("envelope params need a \"beta\" array of [knot, level] pairs");
  std::vector<double> knots, levels;
  for (const auto& pair : j["beta"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
      throw_parse("beta entries must be [knot, level] pairs");
    knots.push_back(pair[0].get<double>());
    levels.push_back(pair[1].get<double>());
  }
  if (knots.size() < 2) throw_parse("beta needs at least an opening and a terminal pair");
  if (std::abs(levels.back()) > 0.0) throw_parse("the terminal beta pair must carry level 0");
  levels.pop_back();
  if (j.contains("U")) {
    double u = require_number(j, "U");
    if (std::abs(u - knots.back()) > 1e-9 * std::max(1.0, std::abs(u)))
      throw_parse("U disagrees with the terminal beta knot");
  }
  EnvelopeParams params{require_number(j, "T"),
                        j.contains("eta") ? require_number(j, "eta") : 0.0,
                        StepFunction(std::move(knots), std::move(levels))};
  if (!(params.t > 0.0)) throw_parse("envelope params need T > 0");
  if (!(params.eta >= 0.0)) throw_parse("envelope params need eta >= 0");
  return params;
}

std::string tightness_report_to_json(const TightnessReport& report) {
  return "{\"C\":" + format_number(report.c) + ",\"beta\":" + format_number(report.beta) +
         ",\"T\":" + format_number(report.t) +
         ",\"grid_n\":" + std::to_string(report.grid_n) +
         ",\"rev\":" + format_number(report.rev) +
         ",\"rev_ratio\":" + format_number(report.rev_ratio) +
         ",\"r_star_lower\":" + format_number(report.r_star_lower) +
         ",\"dual_upper\":" + format_number(report.dual_upper) +
         ",\"delta\":" + format_number(report.delta) + "}";
}

}  // namespace pricinglab
