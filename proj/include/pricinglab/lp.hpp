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
#include "pricinglab/simplex.hpp"

namespace pricinglab {

/// The buyer-utility ceiling that encodes C-consistency inside the
/// hallucinatory-regime program: (1 - C) E[s] + E[(v - s)^+].
double utility_cap(const DiscretePrior& prior, double c, double v);

/// Optimal direct mechanism for a finite prior under the utility cap:
/// per-type allocation x(v), payment p(v), utility u(v) = v x(v) - p(v).
struct MechanismSolution {
  double c = 0.0;
  double rev = 0.0;
  std::vector<double> x;
  std::vector<double> p;
  std::vector<double> u;
};

/// The same optimum as a randomized posted price: nonnegative masses on the
/// support prices, total mass at most one.
struct PriceLottery {
  double c = 0.0;
  double rev = 0.0;
  std::vector<double> prices;
  std::vector<double> masses;
};

/// Feasible point of the minimization program that upper-bounds every
/// mechanism's revenue: scalar eta and a nonincreasing grid function beta
/// with beta(v_max) = 0.
struct DualCertificate {
  double c = 0.0;
  double eta = 0.0;
  std::vector<double> beta;  // one level per support point, last is 0
  double objective = 0.0;
};

/// Signal-contingent implementation of a MechanismSolution: allocate when the
/// realized signal falls below a per-type cutoff, randomizing only on the
/// cutoff atom, with a payment offset that reproduces the expected payment.
///   x(s_j, v_i) = 1 for j < cutoff_index[i], alpha[i] at j == cutoff_index[i]
///   p(s_j, v_i) = s_j x(s_j, v_i) - (1 - C) s_j + offset[i]
/// cutoff_index[i] == -1 means the type is never served.
struct LiftedMechanism {
  double c = 0.0;
  std::vector<int> cutoff_index;
  std::vector<double> alpha;
  std::vector<double> offset;

  double alloc(std::size_t signal, std::size_t report) const;
  double payment(const DiscretePrior& prior, std::size_t signal, std::size_t report) const;
};

/// Worst violations of the full two-regime program, checked by brute force
/// over all support pairs against the fixed accurate-state contract
/// x(v,v,A) = 1, p(v,v,A) = C v.
struct StarReport {
  double max_violation = 0.0;
  double ic_hallucinatory = 0.0;   // (v,H) -> (v',H)
  double ic_accurate_dev = 0.0;    // (v,A) -> (v',H)
  double ir_hallucinatory = 0.0;
  double ir_accurate = 0.0;
  double consistency = 0.0;        // p(v,v,A) >= C v
};

MechanismSolution solve_rev_reduced(const DiscretePrior& prior, double c);
PriceLottery solve_rev_posted(const DiscretePrior& prior, double c);
DualCertificate solve_dual(const DiscretePrior& prior, double c);

LiftedMechanism lift_to_signal(const DiscretePrior& prior, double c,
                               const MechanismSolution& sol);
StarReport verify_star(const DiscretePrior& prior, double c, const LiftedMechanism& lifted);

/// Worst deviation of E_s[x(s,v)] from x(v) and E_s[p(s,v)] from p(v).
double lift_roundtrip_error(const DiscretePrior& prior, const MechanismSolution& sol,
                            const LiftedMechanism& lifted);

/// Adds delta to one cell of the lifted payment offsets; used by the fault
/// injection path of the verification harness.
void inject_payment_fault(LiftedMechanism& lifted, std::size_t report_index, double delta);

}  // namespace pricinglab
