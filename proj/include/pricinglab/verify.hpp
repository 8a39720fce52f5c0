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

#include <cstdint>
#include <string>
#include <vector>

#include "pricinglab/lp.hpp"
#include "pricinglab/prior.hpp"

namespace pricinglab {

/// Deterministic random discrete priors (n in [2, 20], values in (0, 10]),
/// identical across platforms for a given seed.
std::vector<DiscretePrior> make_corpus(std::uint64_t seed, int count);

/// The consistency grid every corpus prior is solved under.
const std::vector<double>& corpus_c_grid();

/// One solved corpus instance, shared by several property suites.
struct CorpusEval {
  std::size_t prior_index = 0;
  double c = 0.0;
  double opt = 0.0;
  MechanismSolution reduced;
  PriceLottery posted;
  DualCertificate dual;
};

std::vector<CorpusEval> evaluate_corpus(const std::vector<DiscretePrior>& corpus);

struct VerifyOptions {
  std::uint64_t seed = 42;
  int corpus_size = 100;
  std::vector<std::string> suites;  // empty selects all; prefix match
  std::string inject_fault;         // "payment" corrupts the lifted payments
  double beta = 1.0;                // explicit tightness run parameters
  double c = 1.0;
  int grid = 200;
  bool explicit_tightness = false;  // run the single (beta, c, grid) triple
};

struct SuiteResult {
  std::string name;
  double max_violation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::vector<std::string> detail;
};

std::vector<SuiteResult> run_verify(const VerifyOptions& options);
std::string format_verify_report(const std::vector<SuiteResult>& results);
bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace pricinglab
