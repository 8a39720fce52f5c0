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

#include "pricinglab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "parallel.hpp"
#include "pricinglab/frontier.hpp"
#include "pricinglab/mechanisms.hpp"
#include "pricinglab/worstcase.hpp"

namespace pricinglab {

namespace {

/// mt19937_64 bits mapped to [0, 1); bit-identical across platforms.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double uniform() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
};

struct SuiteBuilder {
  std::vector<SuiteResult> results;
  const std::vector<std::string>& filter;

  explicit SuiteBuilder(const std::vector<std::string>& f) : filter(f) {}

  bool wants(const std::string& name) const {
    if (filter.empty()) return true;
    for (const auto& f : filter)
      if (name.rfind(f, 0) == 0) return true;
    return false;
  }

  void add(const std::string& name, double violation, double tolerance,
           std::vector<std::string> detail = {}) {
    results.push_back({name, violation, tolerance, violation <= tolerance, std::move(detail)});
  }
};

}  // namespace

std::vector<DiscretePrior> make_corpus(std::uint64_t seed, int count) {
  std::vector<DiscretePrior> corpus;
  corpus.reserve(static_cast<std::size_t>(count));
  Rng rng(seed);
  for (int k = 0; k < count; ++k) {
    std::size_t n = 2 + static_cast<std::size_t>(rng.uniform() * 19.0);
    if (n > 20) n = 20;
    std::vector<double> values(n), probs(n);
    for (auto& v : values) v = 0.05 + 9.95 * rng.uniform();
    std::sort(values.begin(), values.end());
    for (std::size_t i = 1; i < n; ++i)
      values[i] = std::max(values[i], values[i - 1] + 1e-4);
    double sum = 0.0;
    for (auto& p : probs) {
      p = 0.05 + 0.95 * rng.uniform();
      sum += p;
    }
    for (auto& p : probs) p /= sum;
    corpus.emplace_back(std::move(values), std::move(probs));
  }
  return corpus;
}

const std::vector<double>& corpus_c_grid() {
  static const std::vector<double> grid{0.0, 0.3, 0.7, 1.0};
  return grid;
}

std::vector<CorpusEval> evaluate_corpus(const std::vector<DiscretePrior>& corpus) {
  const auto& cs = corpus_c_grid();
  std::vector<CorpusEval> evals(corpus.size() * cs.size());
  detail::parallel_for(evals.size(), [&](std::size_t idx) {
    std::size_t pi = idx / cs.size();
    double c = cs[idx % cs.size()];
    CorpusEval& e = evals[idx];
    e.prior_index = pi;
    e.c = c;
    e.opt = corpus[pi].monopoly().revenue;
    e.reduced = solve_rev_reduced(corpus[pi], c);
    e.posted = solve_rev_posted(corpus[pi], c);
    e.dual = solve_dual(corpus[pi], c);
  });
  return evals;
}

std::vector<SuiteResult> run_verify(const VerifyOptions& options) {
  SuiteBuilder suites(options.suites);

  const bool needs_corpus =
      suites.wants("duality-strong") || suites.wants("duality-representation") ||
      suites.wants("achievability") || suites.wants("rev-monotonicity") ||
      suites.wants("lift-roundtrip") || suites.wants("lift-star") ||
      suites.wants("mech-guess-discount") || suites.wants("mech-lp-dominance") ||
      suites.wants("mech-hidden-price");

  std::vector<DiscretePrior> corpus;
  std::vector<CorpusEval> evals;
  if (needs_corpus) {
    corpus = make_corpus(options.seed, options.corpus_size);
    evals = evaluate_corpus(corpus);
  }

  if (suites.wants("duality-strong")) {
    double worst = 0.0;
    for (const auto& e : evals)
      worst = std::max(worst, std::abs(e.posted.rev - e.dual.objective) / std::max(1.0, e.opt));
    suites.add("duality-strong", worst, 1e-6);
  }
  if (suites.wants("duality-representation")) {
    double worst = 0.0;
    for (const auto& e : evals)
      worst = std::max(worst, std::abs(e.reduced.rev - e.posted.rev) / std::max(1.0, e.opt));
    suites.add("duality-representation", worst, 1e-7);
  }
  if (suites.wants("achievability")) {
    double worst = 0.0;
    for (double c : corpus_c_grid()) {
      double floor = r_star(c).r;
      for (const auto& e : evals)
        if (e.c == c) worst = std::max(worst, floor - e.posted.rev / e.opt);
    }
    suites.add("achievability", worst, 1e-6);
  }
  if (suites.wants("rev-monotonicity")) {
    // the feasible set shrinks as C grows, so revenue must not increase
    double worst = 0.0;
    const auto& cs = corpus_c_grid();
    for (std::size_t pi = 0; pi < corpus.size(); ++pi) {
      for (std::size_t k = 0; k + 1 < cs.size(); ++k) {
        double lo = evals[pi * cs.size() + k].posted.rev;
        double hi = evals[pi * cs.size() + k + 1].posted.rev;
        worst = std::max(worst, hi - lo);
      }
    }
    suites.add("rev-monotonicity", worst, 1e-8);
  }
  if (suites.wants("lift-roundtrip") || suites.wants("lift-star")) {
    std::vector<double> roundtrip(evals.size(), 0.0), star(evals.size(), 0.0);
    const bool faulty = options.inject_fault == "payment";
    detail::parallel_for(evals.size(), [&](std::size_t idx) {
      const auto& e = evals[idx];
      LiftedMechanism lifted = lift_to_signal(corpus[e.prior_index], e.c, e.reduced);
      if (faulty) inject_payment_fault(lifted, 0, 0.1);
      roundtrip[idx] = lift_roundtrip_error(corpus[e.prior_index], e.reduced, lifted);
      star[idx] = verify_star(corpus[e.prior_index], e.c, lifted).max_violation;
    });
    if (suites.wants("lift-roundtrip"))
      suites.add("lift-roundtrip", *std::max_element(roundtrip.begin(), roundtrip.end()), 1e-10);
    if (suites.wants("lift-star"))
      suites.add("lift-star", *std::max_element(star.begin(), star.end()), 1e-8);
  }

  if (suites.wants("tightness")) {
    struct Triple {
      double c, beta;
    };
    std::vector<Triple> triples;
    if (options.explicit_tightness)
      triples.push_back({options.c, options.beta});
    else
      triples = {{1.0, 1.0}, {1.0, 4.0}, {0.5, 1.0}};
    double worst = 0.0;
    std::vector<std::string> detail;
    for (const auto& tr : triples) {
      TightnessReport rep =
          tightness_check(tr.c, tr.beta, 1.0, static_cast<std::size_t>(options.grid));
      double lower = rep.r_star_lower - 0.02;
      double upper = std::min(1.0, rep.dual_upper) + 0.02;
      worst = std::max({worst, lower - rep.rev_ratio, rep.rev_ratio - upper});
      char buf[200];
      std::snprintf(buf, sizeof(buf),
                    "  tightness C=%.3g beta=%.3g grid=%d: rev/T=%.9g in [%.9g, %.9g] delta=%.3g",
                    tr.c, tr.beta, options.grid, rep.rev_ratio, rep.r_star_lower,
                    std::min(1.0, rep.dual_upper), rep.delta);
      detail.push_back(buf);
    }
    suites.add("tightness", worst, 0.0, std::move(detail));
  }

  if (suites.wants("frontier-endpoints")) {
    double left = std::abs(r_star(0.0).r - 1.0);
    double right = std::abs(r_star(1.0).r - 0.5);
    suites.add("frontier-endpoints", std::max(left / 1e-9, right / 1e-3) * 1e-9, 1e-9,
               {"  normalized to the 1e-9 (left) and 1e-3 (right) endpoint tolerances"});
  }
  if (suites.wants("frontier-symmetric")) {
    FrontierPoint sym = symmetric_point();
    double out_of_range = std::max({0.0, 0.81 - sym.c, sym.c - 0.83});
    suites.add("frontier-symmetric", std::max(out_of_range, std::abs(sym.c - sym.r)), 1e-7);
  }
  if (suites.wants("frontier-dominance")) {
    double worst = 0.0;
    for (double c : {0.25, 0.5, 0.75, 1.0})
      worst = std::max(worst, 0.01 - (r_star(c).r - (1.0 - c)));
    suites.add("frontier-dominance", worst, 0.0);
  }
  if (suites.wants("frontier-shape")) {
    auto sweep = frontier_sweep(0.0, 1.0, 41);
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < sweep.size(); ++i)
      worst = std::max(worst, sweep[i + 1].r - sweep[i].r);  // nonincreasing
    for (std::size_t i = 1; i + 1 < sweep.size(); ++i)       // concavity
      worst = std::max(worst, 0.5 * (sweep[i - 1].r + sweep[i + 1].r) - sweep[i].r);
    for (const auto& p : sweep) worst = std::max(worst, (1.0 - p.c) - p.r);
    suites.add("frontier-shape", worst, 1e-9);
  }
  if (suites.wants("frontier-infimum")) {
    double worst = 0.0;
    for (double c : {0.0, 0.3, 0.7, 1.0}) {
      double r = r_star(c).r;
      for (double beta : {0.01, 0.1, 0.5, 1.0, 2.0, 10.0, 1e3})
        worst = std::max(worst, r - dual_objective(beta, c));
    }
    suites.add("frontier-infimum", worst, 1e-9);
  }
  if (suites.wants("frontier-boundary-limit")) {
    // after removing the divergent (1 - C) beta term, the objective tends to
    // 1 - C/2 as beta grows
    double worst = 0.0;
    for (double c : {0.0, 0.5, 1.0}) {
      double beta = 1e6;
      double trimmed = dual_objective(beta, c) - (1.0 - c) * beta;
      worst = std::max(worst, std::abs(trimmed - (1.0 - 0.5 * c)));
    }
    suites.add("frontier-boundary-limit", worst, 1e-5);
  }

  if (suites.wants("mech-guess-discount")) {
    double worst = 0.0;
    for (std::size_t pi = 0; pi < corpus.size(); ++pi) {
      TradeoffReport rep = guess_discount_eval(corpus[pi]);
      double q_star = revenue_curve(corpus[pi], 64).q_star;
      double bound = std::max(0.5, 1.0 - 0.5 * q_star);
      worst = std::max(worst, bound - rep.r);
    }
    suites.add("mech-guess-discount", worst, 1e-9);
  }
  if (suites.wants("mech-lp-dominance")) {
    // the C = 1 optimum dominates the specific perfectly-consistent mechanism
    double worst = 0.0;
    const auto& cs = corpus_c_grid();
    for (std::size_t pi = 0; pi < corpus.size(); ++pi) {
      double lp_rev = evals[pi * cs.size() + (cs.size() - 1)].posted.rev;
      worst = std::max(worst, guess_discount_eval(corpus[pi]).hallucinatory_rev - lp_rev);
    }
    suites.add("mech-lp-dominance", worst, 1e-7);
  }
  if (suites.wants("mech-hidden-price")) {
    double worst = 0.0;
    UniformPrior uni(0.0, 1.0);
    ExponentialPrior expo(1.0);
    for (const Prior* p : {static_cast<const Prior*>(&uni), static_cast<const Prior*>(&expo)}) {
      TradeoffReport rep = hidden_price_eval(*p);
      worst = std::max({worst, std::abs(rep.c - 1.0), std::abs(rep.r - 1.0)});
    }
    for (std::size_t pi = 0; pi < corpus.size(); ++pi) {
      MonopolyResult opt = corpus[pi].monopoly();
      if (opt.price >= corpus[pi].mean())
        worst = std::max(worst, std::abs(hidden_price_eval(corpus[pi]).c - 1.0));
    }
    suites.add("mech-hidden-price", worst, 1e-12);
  }
  if (suites.wants("mech-heavy-tail")) {
    double worst = 0.0;
    EqualRevenuePrior er(3e7);
    double pstar = er.monopoly().price;
    for (double eps : {0.1, 0.5}) {
      HeavyTailParams params = heavy_tail_params(er, eps);
      TradeoffReport rep = heavy_tail_eval(er, params);
      double identity = std::abs(eps * (er.partial_expectation(params.b) - params.m_a) -
                                 (params.m_a - params.q_a * pstar));
      worst = std::max({worst, identity, std::abs(rep.c - (1.0 - eps)),
                        (1.0 - eps) - std::min(rep.c, rep.r)});
    }
    suites.add("mech-heavy-tail", worst, 1e-8);
  }
  if (suites.wants("mech-baseline")) {
    double worst = 0.0;
    UniformPrior uni(0.0, 1.0);
    for (double lambda : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      TradeoffReport rep = public_baseline_eval(uni, lambda);
      worst = std::max(worst, std::abs(rep.c + rep.r - 1.0));
      worst = std::max(worst, (1.0 - lambda) - r_star(lambda).r);  // frontier dominates
    }
    suites.add("mech-baseline", worst, 1e-9);
  }

  return suites.results;
}

std::string format_verify_report(const std::vector<SuiteResult>& results) {
  std::string out = "suite                          max_violation   tolerance   status\n";
  char buf[160];
  for (const auto& r : results) {
    std::snprintf(buf, sizeof(buf), "%-30s %13.4e %11.1e   %s\n", r.name.c_str(),
                  r.max_violation, r.tolerance, r.passed ? "PASS" : "FAIL");
    out += buf;
    for (const auto& line : r.detail) out += line + "\n";
  }
  return out;
}

bool all_passed(const std::vector<SuiteResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return !results.empty();
}

}  // namespace pricinglab
