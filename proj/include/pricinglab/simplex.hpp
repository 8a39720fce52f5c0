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

#include <limits>
#include <vector>

namespace pricinglab {

enum class RowSense { less_equal, equal, greater_equal };

struct LpRow {
  std::vector<double> coeffs;  // dense, one per variable
  RowSense sense = RowSense::less_equal;
  double rhs = 0.0;
};

struct VarBound {
  double lower = 0.0;  // -inf for a free variable
  double upper = std::numeric_limits<double>::infinity();
};

/// max objective . x  subject to rows and per-variable bounds.
/// bounds may be empty, meaning x >= 0 throughout.
struct StandardLp {
  std::vector<double> objective;
  std::vector<LpRow> rows;
  std::vector<VarBound> bounds;
};

enum class LpStatus { optimal, infeasible, unbounded, iteration_limit };

struct LpSolution {
  LpStatus status = LpStatus::optimal;
  double objective = 0.0;
  std::vector<double> x;
  double max_violation = 0.0;  // recomputed against the original rows/bounds
  int iterations = 0;
};

/// Dense two-phase tableau simplex. Dantzig pricing with a permanent switch
/// to Bland's rule after a run of degenerate pivots, which guarantees
/// termination. Intended for the small, well-scaled instances this library
/// produces (a few hundred rows); no presolve, no factorization.
LpSolution solve_standard(const StandardLp& lp);

}  // namespace pricinglab
