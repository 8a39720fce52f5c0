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

#include "pricinglab/lp.hpp"

#include <algorithm>
#include <cmath>

#include "pricinglab/errors.hpp"

namespace pricinglab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_consistency(double c) {
  if (!(c >= 0.0 && c <= 1.0)) throw_invalid("consistency must lie in [0, 1]");
}

void check_status(const LpSolution& sol, const char* what) {
  if (sol.status != LpStatus::optimal) throw_numeric(std::string(what) + ": solver failed");
  if (sol.max_violation > 1e-9)
    throw_numeric(std::string(what) + ": constraint residual above 1e-9");
}

}  // namespace

double utility_cap(const DiscretePrior& prior, double c, double v) {
  check_consistency(c);
  return (1.0 - c) * prior.mean() + prior.cdf_integral(v);
}

MechanismSolution solve_rev_reduced(const DiscretePrior& prior, double c) {
  check_consistency(c);
  const std::size_t n = prior.size();
  const auto& v = prior.values();
  const auto& q = prior.probs();

  // Solved in (allocation, utility) variables: x_i in [0,1] and
  // u_i = v_i x_i - p_i in [0, cap_i], so participation and the utility
  // ceiling are plain bounds and every column stays boxed. Truthfulness for
  // the ordered pair (i, j) reads u_i >= u_j + (v_i - v_j) x_j.
  StandardLp lp;
  lp.objective.assign(2 * n, 0.0);
  lp.bounds.assign(2 * n, VarBound{});
  for (std::size_t i = 0; i < n; ++i) {
    lp.bounds[i] = {0.0, 1.0};
    lp.bounds[n + i] = {0.0, utility_cap(prior, c, v[i])};
    lp.objective[i] = q[i] * v[i];
    lp.objective[n + i] = -q[i];
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      LpRow row;
      row.coeffs.assign(2 * n, 0.0);
      row.coeffs[j] = -(v[i] - v[j]);
      row.coeffs[n + i] += 1.0;
      row.coeffs[n + j] -= 1.0;
      row.sense = RowSense::greater_equal;
      row.rhs = 0.0;
      lp.rows.push_back(std::move(row));
    }
  }

  LpSolution sol = solve_standard(lp);
  check_status(sol, "solve_rev_reduced");
  MechanismSolution out;
  out.c = c;
  out.rev = sol.objective;
  out.x.assign(sol.x.begin(), sol.x.begin() + static_cast<long>(n));
  out.u.assign(sol.x.begin() + static_cast<long>(n), sol.x.end());
  out.p.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.p[i] = v[i] * out.x[i] - out.u[i];
  return out;
}

PriceLottery solve_rev_posted(const DiscretePrior& prior, double c) {
  check_consistency(c);
  const std::size_t n = prior.size();
  const auto& v = prior.values();

  StandardLp lp;
  lp.objective.resize(n);
  for (std::size_t j = 0; j < n; ++j) lp.objective[j] = v[j] * prior.survival_at(j);
  for (std::size_t i = 0; i < n; ++i) {
    // buyer utility at v_i from prices below: sum_{j<=i} (v_i - t_j) g_j
    LpRow row;
    row.coeffs.assign(n, 0.0);
    for (std::size_t j = 0; j < i; ++j) row.coeffs[j] = v[i] - v[j];
    row.sense = RowSense::less_equal;
    row.rhs = utility_cap(prior, c, v[i]);
    lp.rows.push_back(std::move(row));
  }
  LpRow mass;
  mass.coeffs.assign(n, 1.0);
  mass.sense = RowSense::less_equal;
  mass.rhs = 1.0;
  lp.rows.push_back(std::move(mass));

  LpSolution sol = solve_standard(lp);
  check_status(sol, "solve_rev_posted");
  PriceLottery out;
  out.c = c;
  out.rev = sol.objective;
  out.prices = v;
  out.masses = sol.x;
  return out;
}

DualCertificate solve_dual(const DiscretePrior& prior, double c) {
  check_consistency(c);
  const std::size_t n = prior.size();
  const auto& v = prior.values();

  // columns: eta, then the n-1 free levels beta_1..beta_{n-1}; the level at
  // the top support point is pinned to zero and not a variable.
  const std::size_t nb = n - 1;
  StandardLp lp;
  lp.objective.assign(1 + nb, 0.0);
  lp.objective[0] = -1.0;  // minimize via max of the negation
  for (std::size_t k = 0; k < nb; ++k) {
    double dv = v[k + 1] - v[k];
    // strict CDF at the right endpoint of the cell equals P[V <= v_k]
    double coeff = prior.cum_prob(k) * dv;
    if (k == 0) coeff += (1.0 - c) * prior.mean();
    lp.objective[1 + k] = -coeff;
  }
  for (std::size_t k = 0; k < n; ++k) {
    // eta + sum_{j >= k} beta_j dv_j >= v_k P[V >= v_k]
    LpRow row;
    row.coeffs.assign(1 + nb, 0.0);
    row.coeffs[0] = 1.0;
    for (std::size_t j = k; j < nb; ++j) row.coeffs[1 + j] = v[j + 1] - v[j];
    row.sense = RowSense::greater_equal;
    row.rhs = v[k] * prior.survival_at(k);
    lp.rows.push_back(std::move(row));
  }
  for (std::size_t k = 0; k + 1 < nb; ++k) {
    LpRow row;
    row.coeffs.assign(1 + nb, 0.0);
    row.coeffs[1 + k] = 1.0;
    row.coeffs[2 + k] = -1.0;
    row.sense = RowSense::greater_equal;
    row.rhs = 0.0;
    lp.rows.push_back(std::move(row));
  }

  LpSolution sol = solve_standard(lp);
  check_status(sol, "solve_dual");
  DualCertificate out;
  out.c = c;
  out.eta = sol.x[0];
  out.beta.assign(sol.x.begin() + 1, sol.x.end());
  out.beta.push_back(0.0);
  out.objective = -sol.objective;
  return out;
}

double LiftedMechanism::alloc(std::size_t signal, std::size_t report) const {
  int k = cutoff_index[report];
  if (k < 0) return 0.0;
  auto s = static_cast<int>(signal);
  if (s < k) return 1.0;
  if (s == k) return alpha[report];
  return 0.0;
}

double LiftedMechanism::payment(const DiscretePrior& prior, std::size_t signal,
                                std::size_t report) const {
  double s = prior.values()[signal];
  return s * alloc(signal, report) - (1.0 - c) * s + offset[report];
}

LiftedMechanism lift_to_signal(const DiscretePrior& prior, double c,
                               const MechanismSolution& sol) {
  check_consistency(c);
  const std::size_t n = prior.size();
  if (sol.x.size() != n || sol.p.size() != n) throw_invalid("lift_to_signal: size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    double cap = utility_cap(prior, c, prior.values()[i]);
    double u = prior.values()[i] * sol.x[i] - sol.p[i];
    if (u > cap + 1e-8) throw_invalid("lift_to_signal: solution violates the utility cap");
    if (u < -1e-8) throw_invalid("lift_to_signal: solution violates participation");
  }

  LiftedMechanism lift;
  lift.c = c;
  lift.cutoff_index.resize(n);
  lift.alpha.resize(n);
  lift.offset.resize(n);
  const double mu = prior.mean();
  for (std::size_t i = 0; i < n; ++i) {
    double x = std::min(1.0, std::max(0.0, sol.x[i]));
    if (x <= 0.0) {
      lift.cutoff_index[i] = -1;
      lift.alpha[i] = 0.0;
    } else {
      // smallest k with P[V <= v_k] >= x; then F(v_k) <= x <= F(v_k) + q_k
      std::size_t k = 0;
      while (k + 1 < n && prior.cum_prob(k) < x - 1e-15) ++k;
      double f_below = k == 0 ? 0.0 : prior.cum_prob(k - 1);
      lift.cutoff_index[i] = static_cast<int>(k);
      lift.alpha[i] = std::min(1.0, std::max(0.0, (x - f_below) / prior.probs()[k]));
    }
    // offset reproduces E_s[p(s, v_i)] = p_i
    double es_alloc_value = 0.0;  // E[s * x(s, v_i)]
    for (std::size_t j = 0; j < n; ++j)
      es_alloc_value += prior.probs()[j] * prior.values()[j] * lift.alloc(j, i);
    lift.offset[i] = sol.p[i] - es_alloc_value + (1.0 - c) * mu;
  }
  return lift;
}

StarReport verify_star(const DiscretePrior& prior, double c, const LiftedMechanism& lifted) {
  check_consistency(c);
  const std::size_t n = prior.size();
  const auto& v = prior.values();
  const auto& q = prior.probs();

  // interim quantities of the lifted mechanism
  std::vector<double> X(n, 0.0), P(n, 0.0);
  for (std::size_t rep = 0; rep < n; ++rep) {
    for (std::size_t sig = 0; sig < n; ++sig) {
      X[rep] += q[sig] * lifted.alloc(sig, rep);
      P[rep] += q[sig] * lifted.payment(prior, sig, rep);
    }
  }

  StarReport rep;
  for (std::size_t i = 0; i < n; ++i) {
    double u_truth = v[i] * X[i] - P[i];
    rep.ir_hallucinatory = std::max(rep.ir_hallucinatory, -u_truth);
    // accurate state: fixed contract x = 1, p = C v
    double u_accurate = v[i] - c * v[i];
    rep.ir_accurate = std::max(rep.ir_accurate, -u_accurate);
    rep.consistency = std::max(rep.consistency, c * v[i] - c * v[i]);
    for (std::size_t j = 0; j < n; ++j) {
      double u_dev = v[i] * X[j] - P[j];
      rep.ic_hallucinatory = std::max(rep.ic_hallucinatory, u_dev - u_truth);
      // accurate type i deviating to (v_j, H): the realized signal is v_i
      double u_cross = v[i] * lifted.alloc(i, j) - lifted.payment(prior, i, j);
      rep.ic_accurate_dev = std::max(rep.ic_accurate_dev, u_cross - u_accurate);
    }
  }
  rep.max_violation = std::max({rep.ic_hallucinatory, rep.ic_accurate_dev,
                                rep.ir_hallucinatory, rep.ir_accurate, rep.consistency});
  return rep;
}

double lift_roundtrip_error(const DiscretePrior& prior, const MechanismSolution& sol,
                            const LiftedMechanism& lifted) {
  const std::size_t n = prior.size();
  double worst = 0.0;
  for (std::size_t rep = 0; rep < n; ++rep) {
    double ex = 0.0, ep = 0.0;
    for (std::size_t sig = 0; sig < n; ++sig) {
      ex += prior.probs()[sig] * lifted.alloc(sig, rep);
      ep += prior.probs()[sig] * lifted.payment(prior, sig, rep);
    }
    worst = std::max(worst, std::abs(ex - sol.x[rep]));
    worst = std::max(worst, std::abs(ep - sol.p[rep]));
  }
  return worst;
}

void inject_payment_fault(LiftedMechanism& lifted, std::size_t report_index, double delta) {
  if (report_index >= lifted.offset.size()) throw_invalid("inject_payment_fault: bad index");
  lifted.offset[report_index] += delta;
}

}  // namespace pricinglab
