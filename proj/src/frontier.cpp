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

#include "pricinglab/frontier.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "parallel.hpp"
#include "pricinglab/errors.hpp"

namespace pricinglab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kScanLo = 1e-6;
constexpr int kScanPoints = 241;
constexpr int kGoldenIters = 140;

void check_consistency(double c) {
  if (!(c >= 0.0 && c <= 1.0)) throw_invalid("consistency must lie in [0, 1]");
}

/// Golden-section minimization of dual_objective(exp(u), c) on [ulo, uhi].
double golden_min(double ulo, double uhi, double c, double* arg_out) {
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = ulo, b = uhi;
  double x1 = b - phi * (b - a);
  double x2 = a + phi * (b - a);
  double f1 = dual_objective(std::exp(x1), c);
  double f2 = dual_objective(std::exp(x2), c);
  for (int it = 0; it < kGoldenIters; ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = dual_objective(std::exp(x1), c);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = dual_objective(std::exp(x2), c);
    }
    if (b - a < 1e-14) break;
  }
  double u = f1 <= f2 ? x1 : x2;
  if (arg_out) *arg_out = std::exp(u);
  return std::min(f1, f2);
}

}  // namespace

double dual_objective(double beta, double c) {
  if (!(beta > 0.0)) throw_invalid("dual_objective needs beta > 0");
  check_consistency(c);
  double log_term = beta > 1.0 ? std::log1p(1.0 / beta) : std::log(1.0 + 1.0 / beta);
  return (1.0 + beta) - c * (beta + beta * beta) * log_term;
}

FrontierPoint r_star(double c, double beta_max) {
  check_consistency(c);
  if (!(beta_max >= 1.0)) throw_invalid("r_star needs beta_max >= 1");

  const double ulo = std::log(kScanLo), uhi = std::log(beta_max);
  double best_f = kInf, best_u = ulo;
  for (int i = 0; i < kScanPoints; ++i) {
    double u = ulo + (uhi - ulo) * static_cast<double>(i) / (kScanPoints - 1);
    double f = dual_objective(std::exp(u), c);
    if (f < best_f) {
      best_f = f;
      best_u = u;
    }
  }
  const double step = (uhi - ulo) / (kScanPoints - 1);
  double arg = std::exp(best_u);
  double refined = golden_min(std::max(ulo, best_u - step), std::min(uhi, best_u + step), c, &arg);
  double interior = std::min(best_f, refined);

  // Boundary limits of the objective: 1 as beta -> 0 for every C, and the
  // series limit 1 - C/2 as beta -> inf, which is finite only when the linear
  // term (1 - C) beta vanishes, i.e. at C = 1.
  double boundary = 1.0;
  if (c >= 1.0) boundary = std::min(boundary, 1.0 - 0.5 * c);
  if (boundary <= interior) return {c, boundary, kInf};
  return {c, interior, arg};
}

FrontierPoint symmetric_point() {
  double lo = 0.0, hi = 1.0;  // C - R*(C) is -1 at 0 and +0.5 at 1
  for (int it = 0; it < 48 && hi - lo > 1e-9; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid - r_star(mid).r < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  double c = 0.5 * (lo + hi);
  FrontierPoint p = r_star(c);
  return {c, p.r, p.beta_argmin};
}

FrontierPoint baseline(double c) {
  check_consistency(c);
  return {c, 1.0 - c, kInf};
}

std::vector<FrontierPoint> frontier_sweep(double c_min, double c_max, std::size_t steps) {
  if (!(c_min >= 0.0 && c_min <= c_max && c_max <= 1.0))
    throw_invalid("frontier_sweep needs 0 <= c_min <= c_max <= 1");
  if (steps < 2) throw_invalid("frontier_sweep needs steps >= 2");
  std::vector<FrontierPoint> out(steps);
  detail::parallel_for(steps, [&](std::size_t i) {
    double c = c_min + (c_max - c_min) * static_cast<double>(i) / static_cast<double>(steps - 1);
    out[i] = r_star(c);
  });
  return out;
}

std::string frontier_sweep_csv(double c_min, double c_max, std::size_t steps) {
  auto points = frontier_sweep(c_min, c_max, steps);
  std::string csv = "C,R_star,beta_argmin,baseline_R\n";
  char buf[160];
  for (const auto& p : points) {
    std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g,%.12g\n", p.c, p.r, p.beta_argmin,
                  1.0 - p.c);
    csv += buf;
  }
  return csv;
}

}  // namespace pricinglab
