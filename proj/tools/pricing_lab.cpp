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

// Command-line front end; talks to the shared library strictly through the
// C interface in pricinglab.h.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pricinglab.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct StringGuard {
  char* s = nullptr;
  ~StringGuard() { plab_string_free(s); }
};

struct PriorGuard {
  plab_prior* p = nullptr;
  ~PriorGuard() { plab_prior_free(p); }
};

int error_exit_code() {
  switch (plab_last_error_code()) {
    case PLAB_ERR_PARSE:
    case PLAB_ERR_INVALID:
      return kExitUsage;
    default:
      return kExitCheckFailed;
  }
}

int fail_with_last_error(const char* what) {
  std::cerr << what << ": " << plab_last_error() << "\n";
  return error_exit_code();
}

/// --prior accepts a shorthand, inline JSON, or a path to a JSON file.
plab_prior* parse_prior_arg(const std::string& arg) {
  plab_prior* p = plab_prior_parse(arg.c_str());
  if (p) return p;
  if (!arg.empty() && arg.front() != '{') {
    std::ifstream in(arg);
    if (in) {
      std::stringstream buf;
      buf << in.rdbuf();
      return plab_prior_parse(buf.str().c_str());
    }
  }
  return nullptr;
}

int emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return kExitOk;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot open output file: " << path << "\n";
    return kExitCheckFailed;
  }
  out << text;
  if (!text.empty() && text.back() != '\n') out << "\n";
  return kExitOk;
}

std::string format_g(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

int run_frontier(std::size_t steps, double cmin, double cmax, bool symmetric,
                 const std::string& format, const std::string& out_path) {
  if (symmetric) {
    double c = 0.0, r = 0.0;
    if (plab_frontier_symmetric_point(&c, &r) != PLAB_OK)
      return fail_with_last_error("frontier");
    if (format == "json") {
      return emit("{\"C\":" + format_g(c) + ",\"R_star\":" + format_g(r) +
                      ",\"baseline_R\":" + format_g(1.0 - c) + "}",
                  out_path);
    }
    return emit("C,R_star,beta_argmin,baseline_R\n" + format_g(c) + "," + format_g(r) +
                    ",inf," + format_g(1.0 - c) + "\n",
                out_path);
  }
  if (format == "json") {
    std::string body = "{\"points\":[";
    for (std::size_t i = 0; i < steps; ++i) {
      double c = cmin + (cmax - cmin) * static_cast<double>(i) / static_cast<double>(steps - 1);
      double r = 0.0, arg = 0.0;
      if (plab_frontier_r_star(c, &r, &arg) != PLAB_OK) return fail_with_last_error("frontier");
      if (i) body += ",";
      body += "{\"C\":" + format_g(c) + ",\"R_star\":" + format_g(r) + ",\"beta_argmin\":" +
              (std::isinf(arg) ? "null" : format_g(arg)) +
              ",\"baseline_R\":" + format_g(1.0 - c) + "}";
    }
    return emit(body + "]}", out_path);
  }
  StringGuard csv;
  csv.s = plab_frontier_sweep_csv(cmin, cmax, static_cast<int>(steps));
  if (!csv.s) return fail_with_last_error("frontier");
  return emit(csv.s, out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pricing-lab: consistency-robustness tradeoffs for single-buyer pricing "
               "with unreliable signals"};
  app.require_subcommand(1);

  // frontier
  auto* frontier = app.add_subcommand("frontier", "Tabulate the optimal tradeoff curve R*(C)");
  std::size_t steps = 101;
  double cmin = 0.0, cmax = 1.0;
  bool symmetric = false;
  std::string frontier_format = "csv", frontier_out;
  frontier->add_option("--steps", steps, "Grid points over [cmin, cmax]");
  frontier->add_option("--cmin", cmin, "Lower end of the consistency grid");
  frontier->add_option("--cmax", cmax, "Upper end of the consistency grid");
  frontier->add_flag("--symmetric", symmetric, "Report only the C = R*(C) point");
  frontier->add_option("--format", frontier_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  frontier->add_option("-o,--output", frontier_out, "Output path (default: stdout)");

  // rev
  auto* rev = app.add_subcommand("rev", "Solve the optimal-mechanism programs for a prior");
  std::string rev_prior, rev_out;
  double rev_c = 0.0;
  rev->add_option("--prior", rev_prior, "Prior shorthand, inline JSON, or file path")
      ->required();
  rev->add_option("--c", rev_c, "Consistency requirement in [0, 1]")->required();
  rev->add_option("-o,--output", rev_out, "Output path (default: stdout)");

  // mech
  auto* mech = app.add_subcommand("mech", "Evaluate a named mechanism on a prior");
  std::string mech_tag, mech_prior, mech_out;
  double mech_eps = 0.1, mech_lambda = 0.5;
  mech->add_option("tag", mech_tag, "guess-discount | hidden-price | heavy-tail | baseline")
      ->required()
      ->check(CLI::IsMember({"guess-discount", "hidden-price", "heavy-tail", "baseline"}));
  mech->add_option("--prior", mech_prior, "Prior shorthand, inline JSON, or file path")
      ->required();
  mech->add_option("--eps", mech_eps, "Tail parameter for heavy-tail");
  mech->add_option("--lambda", mech_lambda, "Signal-posting probability for baseline");
  mech->add_option("-o,--output", mech_out, "Output path (default: stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Run the numeric property suites");
  std::uint64_t seed = 42;
  int corpus = 100, grid = 200;
  double vbeta = 1.0, vc = 1.0;
  std::vector<std::string> suite_filters;
  std::string inject_fault;
  verify->add_option("--seed", seed, "Corpus seed");
  verify->add_option("--corpus", corpus, "Number of random priors");
  verify->add_option("--suite", suite_filters, "Run only suites matching this prefix");
  verify->add_option("--inject-fault", inject_fault, "Corrupt a checked quantity (payment)")
      ->check(CLI::IsMember({"payment"}));
  verify->add_option("--beta", vbeta, "Tightness beta");
  verify->add_option("--c", vc, "Tightness consistency");
  verify->add_option("--grid", grid, "Tightness grid size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (frontier->parsed()) {
    if (!symmetric && steps < 2) {
      std::cerr << "frontier: --steps must be at least 2\n";
      return kExitUsage;
    }
    if (!(cmin >= 0.0 && cmin <= cmax && cmax <= 1.0)) {
      std::cerr << "frontier: need 0 <= cmin <= cmax <= 1\n";
      return kExitUsage;
    }
    return run_frontier(steps, cmin, cmax, symmetric, frontier_format, frontier_out);
  }

  if (rev->parsed()) {
    PriorGuard prior;
    prior.p = parse_prior_arg(rev_prior);
    if (!prior.p) return fail_with_last_error("rev: cannot parse prior");
    double gap = 0.0;
    StringGuard json;
    json.s = plab_rev_solve(prior.p, rev_c, &gap);
    if (!json.s) return fail_with_last_error("rev");
    int code = emit(json.s, rev_out);
    if (code != kExitOk) return code;
    return gap <= 1e-6 ? kExitOk : kExitCheckFailed;
  }

  if (mech->parsed()) {
    PriorGuard prior;
    prior.p = parse_prior_arg(mech_prior);
    if (!prior.p) return fail_with_last_error("mech: cannot parse prior");
    std::string tag = mech_tag;
    for (auto& ch : tag)
      if (ch == '-') ch = '_';
    double param = tag == "heavy_tail" ? mech_eps : mech_lambda;
    StringGuard json;
    json.s = plab_mech_eval(prior.p, tag.c_str(), param);
    if (!json.s) {
      std::cerr << "mech: " << plab_last_error() << "\n";
      return plab_last_error_code() == PLAB_ERR_INFEASIBLE ? kExitCheckFailed
                                                           : error_exit_code();
    }
    return emit(json.s, mech_out);
  }

  if (verify->parsed()) {
    std::string options = "{\"seed\":" + std::to_string(seed) +
                          ",\"corpus\":" + std::to_string(corpus) +
                          ",\"grid\":" + std::to_string(grid) + ",\"beta\":" + format_g(vbeta) +
                          ",\"c\":" + format_g(vc);
    bool explicit_tightness =
        verify->count("--beta") > 0 || verify->count("--c") > 0 || verify->count("--grid") > 0;
    options += std::string(",\"explicit_tightness\":") + (explicit_tightness ? "true" : "false");
    if (!inject_fault.empty()) options += ",\"inject_fault\":\"" + inject_fault + "\"";
    if (!suite_filters.empty()) {
      options += ",\"suites\":[";
      for (std::size_t i = 0; i < suite_filters.size(); ++i) {
        if (i) options += ",";
        options += "\"" + suite_filters[i] + "\"";
      }
      options += "]";
    }
    options += "}";
    int passed = 0;
    StringGuard report;
    report.s = plab_verify_run(options.c_str(), &passed);
    if (!report.s) return fail_with_last_error("verify");
    std::cout << report.s;
    return passed ? kExitOk : kExitCheckFailed;
  }

  return kExitUsage;
}
