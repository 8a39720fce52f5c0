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

#include "pricinglab/mechanisms.hpp"

#include <algorithm>
#include <cmath>

#include "pricinglab/errors.hpp"

namespace pricinglab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Piecewise-linear segments of s -> max_{p >= s} rho(p) for a piecewise
/// prior, built right to left; used to integrate the hidden-price revenue
/// exactly against the density a_j / s^2 and the atoms.
struct MaxSegments {
  struct Seg {
    double lo, hi;      // covers (lo, hi]
    double alpha, gamma;  // value alpha + gamma s
    std::size_t piece;
  };
  std::vector<Seg> segs;

  explicit MaxSegments(const PiecewisePrior& pw) {
    const auto& knots = pw.knots();
    const auto& pieces = pw.pieces();
    double best_right = 0.0;  // sup of rho over prices beyond the current piece
    for (std::size_t j = pieces.size(); j-- > 0;) {
      double lo = knots[j], hi = knots[j + 1];
      double a = pieces[j].a, b = pieces[j].b;
      double val_hi = a + b * hi;
      if (b >= 0.0) {
        double m = std::max(best_right, val_hi);
        segs.push_back({lo, hi, m, 0.0, j});
        best_right = m;
      } else if (val_hi >= best_right) {
        segs.push_back({lo, hi, a, b, j});
        best_right = std::max(best_right, a + b * lo);
      } else {
        double cross = (best_right - a) / b;  // rho equals best_right here
        cross = std::min(std::max(cross, lo), hi);
        segs.push_back({cross, hi, best_right, 0.0, j});
        segs.push_back({lo, cross, a, b, j});
        best_right = std::max(best_right, a + b * lo);
      }
    }
    std::reverse(segs.begin(), segs.end());
  }

  double value_at(double s) const {
    for (const auto& seg : segs)
      if (s > seg.lo && s <= seg.hi) return seg.alpha + seg.gamma * s;
    return 0.0;
  }
};

/// int_lo^hi (alpha + gamma s) * (dens / s^2) ds
double density_integral(double dens, double alpha, double gamma, double lo, double hi) {
  if (dens == 0.0 || hi <= lo) return 0.0;
  return dens * (alpha * (1.0 / lo - 1.0 / hi) + gamma * std::log(hi / lo));
}

double piecewise_guess_discount_rev(const PiecewisePrior& pw) {
  MaxSegments ms(pw);
  double total = 0.0;
  for (const auto& seg : ms.segs)
    total += density_integral(pw.pieces()[seg.piece].a, seg.alpha, seg.gamma, seg.lo, seg.hi);
  for (std::size_t k = 1; k < pw.knots().size(); ++k) {
    double mass = pw.atom_mass(k);
    if (mass > 0.0) total += mass * ms.value_at(pw.knots()[k]);
  }
  return total;
}

/// E[s * survival(s)] = E[rho(s)]
double mean_posted_signal_rev(const Prior& prior) {
  if (const auto* d = dynamic_cast<const DiscretePrior*>(&prior)) {
    double total = 0.0;
    for (std::size_t i = 0; i < d->size(); ++i)
      total += d->probs()[i] * d->values()[i] * d->survival_at(i);
    return total;
  }
  if (const auto* u = dynamic_cast<const UniformPrior*>(&prior)) {
    double lo = u->lo(), hi = u->hi(), w = hi - lo;
    auto anti = [&](double s) { return hi * s * s / 2.0 - s * s * s / 3.0; };
    return (anti(hi) - anti(lo)) / (w * w);
  }
  if (const auto* e = dynamic_cast<const ExponentialPrior*>(&prior)) {
    return 0.25 / e->rate();
  }
  if (dynamic_cast<const EqualRevenuePrior*>(&prior)) {
    return 1.0;  // every price in the support earns exactly 1
  }
  if (const auto* p = dynamic_cast<const PointMassPrior*>(&prior)) {
    return p->value();
  }
  const auto& pw = dynamic_cast<const PiecewisePrior&>(prior);
  double total = 0.0;
  for (std::size_t j = 0; j < pw.pieces().size(); ++j) {
    total += density_integral(pw.pieces()[j].a, pw.pieces()[j].a, pw.pieces()[j].b,
                              pw.knots()[j], pw.knots()[j + 1]);
  }
  for (std::size_t k = 1; k < pw.knots().size(); ++k) {
    double mass = pw.atom_mass(k);
    if (mass > 0.0) total += mass * pw.revenue_at(pw.knots()[k]);
  }
  return total;
}

double guess_discount_rev(const Prior& prior) {
  if (const auto* d = dynamic_cast<const DiscretePrior*>(&prior)) {
    double total = 0.0;
    for (std::size_t i = 0; i < d->size(); ++i)
      total += d->probs()[i] * d->monopoly_at_least(d->values()[i]).revenue;
    return total;
  }
  if (const auto* u = dynamic_cast<const UniformPrior*>(&prior)) {
    double lo = u->lo(), hi = u->hi(), w = hi - lo;
    double peak = std::max(lo, 0.5 * hi);
    double head = peak * (hi - peak) / w * ((peak - lo) / w);  // rev(peak) * F(peak)
    auto anti = [&](double s) { return hi * s * s / 2.0 - s * s * s / 3.0; };
    return head + (anti(hi) - anti(peak)) / (w * w);
  }
  if (const auto* e = dynamic_cast<const ExponentialPrior*>(&prior)) {
    double rate = e->rate(), pstar = 1.0 / rate;
    double head = pstar * std::exp(-1.0) * (1.0 - std::exp(-1.0));
    // rate * int_{p*}^inf s e^{-2 rate s} ds
    double tail = std::exp(-2.0) * (0.5 * pstar + 0.25 / rate);
    return head + tail;
  }
  if (dynamic_cast<const EqualRevenuePrior*>(&prior)) {
    return 1.0;  // p+(s) earns revenue 1 for every signal in the support
  }
  if (const auto* p = dynamic_cast<const PointMassPrior*>(&prior)) {
    return p->value();
  }
  return piecewise_guess_discount_rev(dynamic_cast<const PiecewisePrior&>(prior));
}

}  // namespace

double p_plus(const Prior& prior, double s) {
  if (!(s >= 0.0)) throw_invalid("p_plus needs s >= 0");
  return prior.monopoly_at_least(s).price;
}

TradeoffReport guess_discount_eval(const Prior& prior) {
  MonopolyResult opt = prior.monopoly();
  TradeoffReport report;
  report.mechanism = "guess_discount";
  report.c = 1.0;
  report.hallucinatory_rev = guess_discount_rev(prior);
  report.opt = opt.revenue;
  report.r = opt.revenue > 0.0 ? report.hallucinatory_rev / opt.revenue : 1.0;
  report.aux.emplace_back("monopoly_price", opt.price);
  return report;
}

TradeoffReport hidden_price_eval(const Prior& prior) {
  double mu = prior.mean();
  if (!(mu > 0.0)) throw_invalid("hidden_price_eval needs a prior with positive mean");
  if (!std::isfinite(mu)) throw_invalid("hidden_price_eval needs a finite mean");
  MonopolyResult opt = prior.monopoly();
  TradeoffReport report;
  report.mechanism = "hidden_price";
  report.c = std::min(opt.price / mu, 1.0);
  report.r = 1.0;
  report.hallucinatory_rev = opt.revenue;
  report.opt = opt.revenue;
  // hidden default price C s + p* - C mu
  report.aux.emplace_back("price_slope", report.c);
  report.aux.emplace_back("price_intercept", opt.price - report.c * mu);
  report.aux.emplace_back("monopoly_price", opt.price);
  report.aux.emplace_back("mean", mu);
  return report;
}

HeavyTailParams heavy_tail_params(const Prior& prior, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw_invalid("heavy_tail_params needs eps in (0, 1)");
  MonopolyResult opt = prior.monopoly();
  double pstar = opt.price;
  if (!std::isfinite(pstar)) throw_invalid("heavy_tail_params needs a finite monopoly price");

  const double step = 0.5;
  auto grid_point = [&](long k) { return prior.support_min() + step * static_cast<double>(k + 1); };
  auto feasible = [&](double a) {
    double q = prior.cdf_strict(a);
    double m = prior.partial_expectation(a);
    return q > 1.0 - eps && m > q * pstar;
  };
  // the cut a cannot sit below the monopoly price, and past it both
  // conditions are monotone, so a doubling search plus bisection on the grid
  // index finds the smallest feasible point
  long k0 = 0;
  if (pstar > grid_point(0))
    k0 = static_cast<long>(std::ceil((pstar - prior.support_min()) / step)) - 1;
  double limit = prior.bounded_support() ? prior.support_max() + step : 9e15;
  long hi_k = -1;
  for (long span = 1; span < (1L << 55); span *= 2) {
    long k = k0 + span - 1;
    if (grid_point(k) > limit) {
      if (hi_k < 0 && feasible(std::min(grid_point(k), limit))) hi_k = k;
      break;
    }
    if (feasible(grid_point(k))) {
      hi_k = k;
      break;
    }
  }
  if (hi_k < 0) throw_infeasible("insufficient tail mass");
  long lo_k = k0 - 1;
  while (hi_k - lo_k > 1) {
    long mid = lo_k + (hi_k - lo_k) / 2;
    if (feasible(grid_point(mid)))
      hi_k = mid;
    else
      lo_k = mid;
  }

  HeavyTailParams params;
  params.eps = eps;
  params.a = grid_point(hi_k);
  params.q_a = prior.cdf_strict(params.a);
  params.m_a = prior.partial_expectation(params.a);
  double target = params.m_a - params.q_a * pstar;

  // calibrate b: eps (m(b) - m(a)) == target, m nondecreasing
  if (!prior.bounded_support())
    throw_infeasible("insufficient tail mass");  // m(b) - m(a) bounded by mu - m(a)
  double b_hi = prior.support_max();
  auto residual = [&](double b) {
    return eps * (prior.partial_expectation(b) - params.m_a) - target;
  };
  if (residual(b_hi) < -1e-12 * std::max(1.0, target))
    throw_infeasible("insufficient tail mass");
  double lo = params.a, hi = b_hi;
  for (int it = 0; it < 200 && std::nextafter(lo, hi) < hi; ++it) {
    double mid = 0.5 * (lo + hi);
    if (residual(mid) >= 0.0)
      hi = mid;
    else
      lo = mid;
  }
  params.b = hi;
  double m_left = prior.partial_expectation(std::nextafter(params.b, params.a));
  double short_of_target = target / eps - (m_left - params.m_a);
  if (short_of_target > 1e-12 * std::max(1.0, target)) {
    // b sits on an atom: split its transfer weight to hit the calibration
    double atom_value = prior.partial_expectation(params.b) - m_left;
    params.atom_split_weight = std::min(1.0, std::max(0.0, short_of_target / atom_value));
    params.atom_adjusted = true;
  }
  return params;
}

TradeoffReport heavy_tail_eval(const Prior& prior, const HeavyTailParams& params) {
  if (!(params.eps > 0.0 && params.eps < 1.0)) throw_invalid("heavy_tail_eval: bad params");
  MonopolyResult opt = prior.monopoly();
  TradeoffReport report;
  report.mechanism = "heavy_tail";
  report.c = 1.0 - params.eps;
  report.hallucinatory_rev = params.q_a * opt.price * prior.survival(opt.price);
  report.opt = opt.revenue;
  report.r = opt.revenue > 0.0 ? report.hallucinatory_rev / opt.revenue : 1.0;
  report.aux.emplace_back("a", params.a);
  report.aux.emplace_back("b", params.b);
  report.aux.emplace_back("q_a", params.q_a);
  report.aux.emplace_back("m_a", params.m_a);
  report.aux.emplace_back("participation_threshold", opt.price);
  report.aux.emplace_back("atom_split_weight", params.atom_split_weight);
  report.aux.emplace_back("atom_adjusted", params.atom_adjusted ? 1.0 : 0.0);
  return report;
}

TradeoffReport public_baseline_eval(const Prior& prior, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw_invalid("baseline needs lambda in [0, 1]");
  MonopolyResult opt = prior.monopoly();
  TradeoffReport report;
  report.mechanism = "baseline";
  report.c = lambda;
  report.r = 1.0 - lambda;
  report.hallucinatory_rev = (1.0 - lambda) * opt.revenue;  // the guaranteed part
  report.opt = opt.revenue;
  double signal_rev = mean_posted_signal_rev(prior);
  report.aux.emplace_back("exact_hallucinatory_rev",
                          (1.0 - lambda) * opt.revenue + lambda * signal_rev);
  report.aux.emplace_back("posted_signal_rev", signal_rev);
  return report;
}

}  // namespace pricinglab
