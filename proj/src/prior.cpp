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

#include "pricinglab/prior.hpp"

#include <algorithm>
#include <cmath>

#include "pricinglab/errors.hpp"

namespace pricinglab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

}  // namespace

// ---------------------------------------------------------------------------
// DiscretePrior

DiscretePrior::DiscretePrior(std::vector<double> values, std::vector<double> probs)
    : values_(std::move(values)), probs_(std::move(probs)) {
  if (values_.empty() || values_.size() != probs_.size())
    throw_invalid("discrete prior needs matching nonempty values/probs");
  double sum = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!(values_[i] >= 0.0) || !std::isfinite(values_[i]))
      throw_invalid("discrete prior values must be finite and nonnegative");
    if (i > 0 && !(values_[i] > values_[i - 1]))
      throw_invalid("discrete prior values must be strictly ascending");
    if (!(probs_[i] > 0.0) || !std::isfinite(probs_[i]))
      throw_invalid("discrete prior probabilities must be positive");
    sum += probs_[i];
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw_invalid("discrete prior probabilities must sum to 1 within 1e-9");
  for (double& p : probs_) p /= sum;

  cum_.resize(values_.size());
  surv_.resize(values_.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    acc += probs_[i];
    cum_[i] = acc;
    mean_ += values_[i] * probs_[i];
  }
  cum_.back() = 1.0;
  double tail = 0.0;
  for (std::size_t i = values_.size(); i-- > 0;) {
    tail += probs_[i];
    surv_[i] = tail;
  }
  surv_.front() = 1.0;
}

double DiscretePrior::cdf_strict(double v) const {
  // P[V < v]: first index with value >= v, everything before it is below v.
  auto it = std::lower_bound(values_.begin(), values_.end(), v);
  if (it == values_.begin()) return 0.0;
  if (it == values_.end()) return 1.0;
  return cum_[static_cast<std::size_t>(it - values_.begin()) - 1];
}

double DiscretePrior::partial_expectation(double a) const {
  double m = 0.0;
  for (std::size_t i = 0; i < values_.size() && values_[i] <= a; ++i)
    m += values_[i] * probs_[i];
  return m;
}

double DiscretePrior::cdf_integral(double v) const {
  double s = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] >= v) break;
    s += (v - values_[i]) * probs_[i];
  }
  return s;
}

double DiscretePrior::quantile(double u) const {
  if (u <= 0.0) return values_.front();
  auto it = std::lower_bound(cum_.begin(), cum_.end(), std::min(u, 1.0) - 1e-15);
  if (it == cum_.end()) return values_.back();
  return values_[static_cast<std::size_t>(it - cum_.begin())];
}

double DiscretePrior::price_at_quantile(double q) const {
  // largest support point whose survival still reaches q
  for (std::size_t i = values_.size(); i-- > 0;) {
    if (surv_[i] >= q) return values_[i];
  }
  return values_.front();
}

MonopolyResult DiscretePrior::monopoly() const {
  MonopolyResult best{values_.front(), values_.front() * surv_.front()};
  for (std::size_t i = 1; i < values_.size(); ++i) {
    double rev = values_[i] * surv_[i];
    if (rev > best.revenue) best = {values_[i], rev};
  }
  return best;
}

MonopolyResult DiscretePrior::monopoly_at_least(double floor) const {
  MonopolyResult best{floor, floor * survival(floor)};
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < floor) continue;
    double rev = values_[i] * surv_[i];
    if (rev > best.revenue) best = {values_[i], rev};
  }
  return best;
}

// ---------------------------------------------------------------------------
// UniformPrior

UniformPrior::UniformPrior(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!(lo >= 0.0) || !(hi > lo) || !std::isfinite(hi))
    throw_invalid("uniform prior needs 0 <= lo < hi");
}

double UniformPrior::cdf_strict(double v) const {
  return clamp01((v - lo_) / (hi_ - lo_));
}

double UniformPrior::partial_expectation(double a) const {
  if (a <= lo_) return 0.0;
  double top = std::min(a, hi_);
  return (top * top - lo_ * lo_) / (2.0 * (hi_ - lo_));
}

double UniformPrior::cdf_integral(double v) const {
  if (v <= lo_) return 0.0;
  if (v <= hi_) {
    double d = v - lo_;
    return d * d / (2.0 * (hi_ - lo_));
  }
  return 0.5 * (hi_ - lo_) + (v - hi_);
}

double UniformPrior::quantile(double u) const { return lo_ + clamp01(u) * (hi_ - lo_); }

double UniformPrior::price_at_quantile(double q) const {
  return hi_ - clamp01(q) * (hi_ - lo_);
}

MonopolyResult UniformPrior::monopoly() const {
  double p = std::max(lo_, 0.5 * hi_);
  return {p, p * survival(p)};
}

MonopolyResult UniformPrior::monopoly_at_least(double floor) const {
  // p * survival(p) increases up to max(lo, hi/2) and decreases after
  double peak = std::max(lo_, 0.5 * hi_);
  double p = std::max(floor, std::min(peak, hi_));
  if (floor > hi_) p = floor;
  return {p, p * survival(p)};
}

// ---------------------------------------------------------------------------
// ExponentialPrior

ExponentialPrior::ExponentialPrior(double rate) : rate_(rate) {
  if (!(rate > 0.0) || !std::isfinite(rate)) throw_invalid("exponential prior needs rate > 0");
}

double ExponentialPrior::cdf_strict(double v) const {
  return v <= 0.0 ? 0.0 : -std::expm1(-rate_ * v);
}

double ExponentialPrior::partial_expectation(double a) const {
  if (a <= 0.0) return 0.0;
  // int_0^a v rate e^{-rate v} dv
  return -std::expm1(-rate_ * a) / rate_ - a * std::exp(-rate_ * a);
}

double ExponentialPrior::cdf_integral(double v) const {
  if (v <= 0.0) return 0.0;
  return v + std::expm1(-rate_ * v) / rate_;
}

double ExponentialPrior::quantile(double u) const {
  if (u >= 1.0) return kInf;
  return u <= 0.0 ? 0.0 : -std::log1p(-u) / rate_;
}

double ExponentialPrior::price_at_quantile(double q) const {
  if (q <= 0.0) return kInf;
  return q >= 1.0 ? 0.0 : -std::log(q) / rate_;
}

MonopolyResult ExponentialPrior::monopoly() const {
  double p = 1.0 / rate_;
  return {p, p * std::exp(-1.0)};
}

MonopolyResult ExponentialPrior::monopoly_at_least(double floor) const {
  double p = std::max(floor, 1.0 / rate_);
  return {p, p * std::exp(-rate_ * p)};
}

// ---------------------------------------------------------------------------
// EqualRevenuePrior

EqualRevenuePrior::EqualRevenuePrior(double truncation) : m_(truncation) {
  if (!(truncation > 1.0) || !std::isfinite(truncation))
    throw_invalid("equal-revenue prior needs truncation > 1");
}

double EqualRevenuePrior::cdf_strict(double v) const {
  if (v <= 1.0) return 0.0;
  if (v <= m_) return 1.0 - 1.0 / v;
  return 1.0;
}

double EqualRevenuePrior::mean() const { return 1.0 + std::log(m_); }

double EqualRevenuePrior::partial_expectation(double a) const {
  if (a < 1.0) return 0.0;
  if (a < m_) return std::log(a);
  return std::log(m_) + 1.0;  // atom at M contributes M * (1/M)
}

double EqualRevenuePrior::cdf_integral(double v) const {
  if (v <= 1.0) return 0.0;
  if (v <= m_) return (v - 1.0) - std::log(v);
  return (m_ - 1.0) - std::log(m_) + (v - m_);
}

double EqualRevenuePrior::quantile(double u) const {
  if (u <= 0.0) return 1.0;
  if (u >= 1.0 - 1.0 / m_) return m_;
  return 1.0 / (1.0 - u);
}

double EqualRevenuePrior::price_at_quantile(double q) const {
  if (q <= 1.0 / m_) return m_;
  return q >= 1.0 ? 1.0 : 1.0 / q;
}

MonopolyResult EqualRevenuePrior::monopoly() const {
  // every price in [1, M] earns 1; smallest maximizer convention
  return {1.0, 1.0};
}

MonopolyResult EqualRevenuePrior::monopoly_at_least(double floor) const {
  if (floor <= 1.0) return {1.0, 1.0};
  if (floor <= m_) return {floor, floor * survival(floor)};
  return {floor, 0.0};
}

// ---------------------------------------------------------------------------
// PointMassPrior

PointMassPrior::PointMassPrior(double value) : v0_(value) {
  if (!(value >= 0.0) || !std::isfinite(value)) throw_invalid("point mass needs value >= 0");
}

MonopolyResult PointMassPrior::monopoly_at_least(double floor) const {
  if (floor <= v0_) return {v0_, v0_};
  return {floor, 0.0};
}

// ---------------------------------------------------------------------------
// PiecewisePrior

PiecewisePrior::PiecewisePrior(std::vector<double> knots, std::vector<Piece> pieces)
    : knots_(std::move(knots)), pieces_(std::move(pieces)) {
  if (knots_.size() < 2 || knots_.size() != pieces_.size() + 1)
    throw_invalid("piecewise prior needs knots.size() == pieces.size() + 1 >= 2");
  if (knots_.front() != 0.0) throw_invalid("piecewise prior knots must start at 0");
  for (std::size_t j = 1; j < knots_.size(); ++j) {
    if (!(knots_[j] > knots_[j - 1]) || !std::isfinite(knots_[j]))
      throw_invalid("piecewise prior knots must be strictly ascending");
  }
  if (pieces_.front().a != 0.0 || pieces_.front().b != 1.0)
    throw_invalid("piecewise prior must open with rho(p) = p (no mass below first knot)");
  const double tol = 1e-9 * std::max(1.0, knots_.back());
  for (std::size_t j = 0; j < pieces_.size(); ++j) {
    if (pieces_[j].a < -tol) throw_invalid("piecewise prior needs nonincreasing survival");
    double lo = knots_[j], hi = knots_[j + 1];
    double rlo = pieces_[j].a + pieces_[j].b * lo;
    double rhi = pieces_[j].a + pieces_[j].b * hi;
    if (rlo < -tol || rhi < -tol) throw_invalid("piecewise prior revenue must be nonnegative");
    if (rlo > lo + tol || rhi > hi + tol)
      throw_invalid("piecewise prior revenue exceeds price (survival > 1)");
    if (j > 0) {
      double prev = pieces_[j - 1].a + pieces_[j - 1].b * lo;
      if (rlo > prev + tol) throw_invalid("piecewise prior has an upward revenue jump");
    }
  }
  // mean = int survival = sum_j [ a_j ln(hi/lo) + b_j (hi - lo) ]
  for (std::size_t j = 0; j < pieces_.size(); ++j) {
    double lo = knots_[j], hi = knots_[j + 1];
    mean_ += pieces_[j].b * (hi - lo);
    if (pieces_[j].a != 0.0) mean_ += pieces_[j].a * std::log(hi / lo);
  }
}

std::size_t PiecewisePrior::piece_index(double v) const {
  // piece j covers (knots_[j], knots_[j+1]]
  auto it = std::lower_bound(knots_.begin(), knots_.end(), v);
  std::size_t idx = static_cast<std::size_t>(it - knots_.begin());
  if (idx == 0) return 0;
  return std::min(idx - 1, pieces_.size() - 1);
}

double PiecewisePrior::revenue_at(double p) const {
  if (p <= 0.0) return 0.0;
  if (p > knots_.back()) return 0.0;
  std::size_t j = piece_index(p);
  return pieces_[j].a + pieces_[j].b * p;
}

double PiecewisePrior::atom_mass(std::size_t k) const {
  if (k == 0 || k >= knots_.size()) return 0.0;
  double x = knots_[k];
  double left = pieces_[k - 1].a + pieces_[k - 1].b * x;
  double right = (k < pieces_.size()) ? pieces_[k].a + pieces_[k].b * x : 0.0;
  return std::max(0.0, (left - right) / x);
}

double PiecewisePrior::cdf_strict(double v) const {
  if (v <= knots_[1]) return 0.0;  // first piece carries rho(p) = p
  if (v > knots_.back()) return 1.0;
  return clamp01(1.0 - revenue_at(v) / v);
}

double PiecewisePrior::partial_expectation(double a) const {
  double m = 0.0;
  for (std::size_t j = 0; j < pieces_.size(); ++j) {
    double lo = knots_[j], hi = std::min(knots_[j + 1], a);
    if (hi > lo && pieces_[j].a != 0.0) m += pieces_[j].a * std::log(hi / lo);
    if (knots_[j + 1] <= a) m += atom_mass(j + 1) * knots_[j + 1];
    if (knots_[j + 1] >= a) break;
  }
  return m;
}

double PiecewisePrior::cdf_integral(double v) const {
  if (v <= 0.0) return 0.0;
  double surv_int = 0.0;
  for (std::size_t j = 0; j < pieces_.size() && knots_[j] < v; ++j) {
    double lo = knots_[j], hi = std::min(knots_[j + 1], v);
    surv_int += pieces_[j].b * (hi - lo);
    if (pieces_[j].a != 0.0) surv_int += pieces_[j].a * std::log(hi / lo);
  }
  double capped = std::min(v, knots_.back());
  return (capped - surv_int) + std::max(0.0, v - knots_.back());
}

double PiecewisePrior::quantile(double u) const {
  u = clamp01(u);
  for (std::size_t j = 0; j < pieces_.size(); ++j) {
    double hi = knots_[j + 1];
    // CDF at the right end of this piece (atom excluded), then with atom
    double f_hi = 1.0 - (pieces_[j].a + pieces_[j].b * hi) / hi;
    if (u <= f_hi) {
      // continuous stretch: solve 1 - (a + b v)/v = u inside (lo, hi]
      double denom = 1.0 - u - pieces_[j].b;
      if (pieces_[j].a == 0.0 || denom <= 0.0) continue;  // flat CDF stretch
      double v = pieces_[j].a / denom;
      return std::min(std::max(v, knots_[j]), hi);
    }
    double f_next = (j + 1 < pieces_.size())
                        ? 1.0 - (pieces_[j + 1].a + pieces_[j + 1].b * hi) / hi
                        : 1.0;
    if (u <= f_next) return hi;  // inside the atom at this knot
  }
  return knots_.back();
}

double PiecewisePrior::price_at_quantile(double q) const {
  q = clamp01(q);
  for (std::size_t j = pieces_.size(); j-- > 0;) {
    double lo = knots_[j], hi = knots_[j + 1];
    double s_hi = (pieces_[j].a + pieces_[j].b * hi) / hi;  // survival at hi (atom included)
    if (s_hi >= q) return hi;
    // survival within the piece: b + a/p, decreasing in p
    if (pieces_[j].a > 0.0 && q > pieces_[j].b) {
      double p = pieces_[j].a / (q - pieces_[j].b);
      if (p > lo && p <= hi) return p;
    }
  }
  return knots_[1];
}

MonopolyResult PiecewisePrior::monopoly() const {
  MonopolyResult best{knots_[1], revenue_at(knots_[1])};
  for (std::size_t k = 2; k < knots_.size(); ++k) {
    double rev = revenue_at(knots_[k]);
    if (rev > best.revenue) best = {knots_[k], rev};
  }
  return best;
}

MonopolyResult PiecewisePrior::monopoly_at_least(double floor) const {
  MonopolyResult best{floor, floor <= 0.0 ? 0.0 : floor * survival(floor)};
  for (std::size_t k = 1; k < knots_.size(); ++k) {
    if (knots_[k] < floor) continue;
    double rev = revenue_at(knots_[k]);
    if (rev > best.revenue) best = {knots_[k], rev};
  }
  return best;
}

double PiecewisePrior::support_min() const { return knots_[1]; }

// ---------------------------------------------------------------------------
// Free functions

RevenueCurve revenue_curve(const Prior& prior, std::size_t grid_size) {
  if (grid_size < 2) throw_invalid("revenue_curve needs grid_size >= 2");
  std::vector<double> grid;
  grid.reserve(grid_size + 32);
  for (std::size_t i = 0; i < grid_size; ++i)
    grid.push_back(static_cast<double>(i) / static_cast<double>(grid_size - 1));
  if (const auto* d = dynamic_cast<const DiscretePrior*>(&prior)) {
    for (std::size_t i = 0; i < d->size(); ++i) grid.push_back(d->survival_at(i));
  }
  grid.push_back(clamp01(prior.survival(prior.monopoly().price)));
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end(),
                         [](double a, double b) { return std::abs(a - b) < 1e-15; }),
             grid.end());

  RevenueCurve curve;
  curve.q = grid;
  curve.r.resize(grid.size());
  curve.r_plus.resize(grid.size());
  double run = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    curve.r[i] = grid[i] <= 0.0 ? 0.0 : grid[i] * prior.price_at_quantile(grid[i]);
    run = std::max(run, curve.r[i]);
    curve.r_plus[i] = run;
  }
  curve.opt = run;
  curve.q_star = grid.back();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (curve.r[i] >= curve.opt - 1e-12 * std::max(1.0, curve.opt)) {
      curve.q_star = grid[i];
      break;
    }
  }
  return curve;
}

DiscretePrior discretize(const Prior& prior, std::size_t n) {
  if (n < 2) throw_invalid("discretize needs n >= 2");
  if (!prior.bounded_support())
    throw_invalid("discretize requires bounded support; truncate the prior first");
  std::vector<double> values, probs;
  values.reserve(n);
  probs.reserve(n);
  const double mass = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    double v = prior.quantile((static_cast<double>(i) + 0.5) * mass);
    if (!values.empty() && v - values.back() <= 1e-12 * std::max(1.0, std::abs(v))) {
      probs.back() += mass;
    } else {
      values.push_back(v);
      probs.push_back(mass);
    }
  }
  return DiscretePrior(std::move(values), std::move(probs));
}

}  // namespace pricinglab
