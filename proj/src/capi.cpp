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

#include "pricinglab.h"

#include <cmath>
#include <cstring>
#include <memory>
#include <string>

#include <json.hpp>

#include "pricinglab/errors.hpp"
#include "pricinglab/frontier.hpp"
#include "pricinglab/json_io.hpp"
#include "pricinglab/lp.hpp"
#include "pricinglab/mechanisms.hpp"
#include "pricinglab/prior.hpp"
#include "pricinglab/verify.hpp"
#include "pricinglab/worstcase.hpp"

using namespace pricinglab;

namespace {

thread_local std::string g_last_error;
thread_local int g_last_code = PLAB_OK;

void clear_error() {
  g_last_error.clear();
  g_last_code = PLAB_OK;
}

int record_error(const std::exception& e) {
  g_last_error = e.what();
  g_last_code = PLAB_ERR_INTERNAL;
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    switch (err->kind()) {
      case Error::Kind::invalid_argument: g_last_code = PLAB_ERR_INVALID; break;
      case Error::Kind::parse: g_last_code = PLAB_ERR_PARSE; break;
      case Error::Kind::infeasible: g_last_code = PLAB_ERR_INFEASIBLE; break;
      case Error::Kind::numeric: g_last_code = PLAB_ERR_INTERNAL; break;
    }
  }
  return g_last_code;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const Prior& unwrap(const plab_prior* prior) {
  if (!prior) throw_invalid("null prior handle");
  return **reinterpret_cast<const PriorPtr*>(prior);
}

plab_prior* wrap(PriorPtr prior) {
  return reinterpret_cast<plab_prior*>(new PriorPtr(std::move(prior)));
}

template <typename Fn>
int guarded(Fn&& fn) {
  clear_error();
  try {
    fn();
    return PLAB_OK;
  } catch (const std::exception& e) {
    return record_error(e);
  }
}

template <typename Fn>
char* guarded_string(Fn&& fn) {
  clear_error();
  try {
    return dup_string(fn());
  } catch (const std::exception& e) {
    record_error(e);
    return nullptr;
  }
}

}  // namespace

extern "C" {

const char* plab_version(void) { return "0.1.0"; }

const char* plab_last_error(void) { return g_last_error.c_str(); }

int plab_last_error_code(void) { return g_last_code; }

plab_prior* plab_prior_parse(const char* text) {
  clear_error();
  try {
    if (!text) throw_invalid("null prior text");
    return wrap(parse_prior_spec(text));
  } catch (const std::exception& e) {
    record_error(e);
    return nullptr;
  }
}

plab_prior* plab_prior_f_beta(double t, double beta) {
  clear_error();
  try {
    return wrap(std::make_shared<PiecewisePrior>(f_beta(t, beta)));
  } catch (const std::exception& e) {
    record_error(e);
    return nullptr;
  }
}

plab_prior* plab_prior_discretize(const plab_prior* prior, int grid_n) {
  clear_error();
  try {
    if (grid_n < 2) throw_invalid("discretize needs grid_n >= 2");
    return wrap(std::make_shared<DiscretePrior>(
        discretize(unwrap(prior), static_cast<std::size_t>(grid_n))));
  } catch (const std::exception& e) {
    record_error(e);
    return nullptr;
  }
}

void plab_prior_free(plab_prior* prior) {
  delete reinterpret_cast<PriorPtr*>(prior);
}

int plab_prior_monopoly(const plab_prior* prior, double* price, double* revenue) {
  return guarded([&] {
    MonopolyResult m = unwrap(prior).monopoly();
    if (price) *price = m.price;
    if (revenue) *revenue = m.revenue;
  });
}

int plab_prior_mean(const plab_prior* prior, double* mean) {
  return guarded([&] {
    if (!mean) throw_invalid("null output pointer");
    *mean = unwrap(prior).mean();
  });
}

int plab_prior_partial_expectation(const plab_prior* prior, double a, double* out) {
  return guarded([&] {
    if (!out) throw_invalid("null output pointer");
    if (!(a >= 0.0)) throw_invalid("partial expectation needs a >= 0");
    *out = unwrap(prior).partial_expectation(a);
  });
}

char* plab_prior_to_json(const plab_prior* prior) {
  return guarded_string([&] { return prior_to_json(unwrap(prior)); });
}

int plab_frontier_dual_objective(double beta, double c, double* out) {
  return guarded([&] {
    if (!out) throw_invalid("null output pointer");
    *out = dual_objective(beta, c);
  });
}

int plab_frontier_r_star(double c, double* r, double* beta_argmin) {
  return guarded([&] {
    FrontierPoint p = r_star(c);
    if (r) *r = p.r;
    if (beta_argmin) *beta_argmin = p.beta_argmin;
  });
}

int plab_frontier_symmetric_point(double* c, double* r) {
  return guarded([&] {
    FrontierPoint p = symmetric_point();
    if (c) *c = p.c;
    if (r) *r = p.r;
  });
}

char* plab_frontier_sweep_csv(double c_min, double c_max, int steps) {
  return guarded_string([&] {
    if (steps < 2) throw_invalid("frontier sweep needs steps >= 2");
    return frontier_sweep_csv(c_min, c_max, static_cast<std::size_t>(steps));
  });
}

char* plab_rev_solve(const plab_prior* prior, double c, double* gap) {
  return guarded_string([&] {
    const Prior& p = unwrap(prior);
    // the programs need finite support; bounded analytic priors go through
    // the standard 200-atom grid (a point mass collapses to its exact atom)
    const auto* d = dynamic_cast<const DiscretePrior*>(&p);
    std::unique_ptr<DiscretePrior> grid;
    if (!d) {
      if (!p.bounded_support())
        throw_invalid("rev solve needs a discrete or bounded prior; truncate first");
      grid = std::make_unique<DiscretePrior>(discretize(p, 200));
      d = grid.get();
    }
    MechanismSolution reduced = solve_rev_reduced(*d, c);
    PriceLottery posted = solve_rev_posted(*d, c);
    DualCertificate dual = solve_dual(*d, c);
    double g = std::abs(posted.rev - dual.objective);
    if (gap) *gap = g;
    return rev_bundle_to_json(reduced, posted, dual, g);
  });
}

char* plab_mech_eval(const plab_prior* prior, const char* mechanism, double param) {
  return guarded_string([&] {
    if (!mechanism) throw_invalid("null mechanism tag");
    const Prior& p = unwrap(prior);
    std::string tag = mechanism;
    TradeoffReport report;
    if (tag == "guess_discount") {
      report = guess_discount_eval(p);
    } else if (tag == "hidden_price") {
      report = hidden_price_eval(p);
    } else if (tag == "heavy_tail") {
      report = heavy_tail_eval(p, heavy_tail_params(p, param));
    } else if (tag == "baseline") {
      report = public_baseline_eval(p, param);
    } else {
      throw_invalid("unknown mechanism: " + tag);
    }
    return tradeoff_report_to_json(report);
  });
}

char* plab_tightness_check(double c, double beta, double t, int grid_n) {
  return guarded_string([&] {
    if (grid_n < 50) throw_invalid("tightness check needs grid_n >= 50");
    return tightness_report_to_json(
        tightness_check(c, beta, t, static_cast<std::size_t>(grid_n)));
  });
}

char* plab_verify_run(const char* options_json, int* all_passed) {
  return guarded_string([&] {
    VerifyOptions options;
    if (options_json && options_json[0] != '\0') {
      nlohmann::json j = nlohmann::json::parse(options_json, nullptr, false);
      if (j.is_discarded()) throw_parse("malformed verify options JSON");
      if (j.contains("seed")) options.seed = j["seed"].get<std::uint64_t>();
      if (j.contains("corpus")) options.corpus_size = j["corpus"].get<int>();
      if (j.contains("suites"))
        for (const auto& s : j["suites"]) options.suites.push_back(s.get<std::string>());
      if (j.contains("inject_fault")) options.inject_fault = j["inject_fault"].get<std::string>();
      if (j.contains("beta")) options.beta = j["beta"].get<double>();
      if (j.contains("c")) options.c = j["c"].get<double>();
      if (j.contains("grid")) options.grid = j["grid"].get<int>();
      if (j.contains("explicit_tightness"))
        options.explicit_tightness = j["explicit_tightness"].get<bool>();
    }
    if (options.corpus_size < 1 || options.corpus_size > 100000)
      throw_invalid("corpus size out of range");
    auto results = run_verify(options);
    if (all_passed) *all_passed = pricinglab::all_passed(results) ? 1 : 0;
    return format_verify_report(results);
  });
}

void plab_string_free(char* s) { delete[] s; }

}  // extern "C"
