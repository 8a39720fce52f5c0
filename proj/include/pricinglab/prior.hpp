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
#include <limits>
#include <memory>
#include <string>
#include <vector>

namespace pricinglab {

struct MonopolyResult {
  double price = 0.0;
  double revenue = 0.0;
};

/// Value distribution of a single buyer.
///
/// The CDF convention is strict everywhere in this library:
///   cdf_strict(v) = P[V < v],   survival(v) = P[V >= v].
/// With this convention a posted price equal to an atom collects that atom's
/// mass (seller-favoring tie-break). All implementations are immutable after
/// construction; every method is pure and safe to call concurrently.
class Prior {
 public:
  virtual ~Prior() = default;

  virtual double cdf_strict(double v) const = 0;
  double survival(double v) const { return 1.0 - cdf_strict(v); }

  virtual double mean() const = 0;

  /// m(a) = E[v * 1{v <= a}], the truncated expectation (atom at a included).
  virtual double partial_expectation(double a) const = 0;

  /// integral_0^v cdf_strict(u) du, which equals E[(v - s)^+] for s ~ prior.
  virtual double cdf_integral(double v) const = 0;

  /// inf{ x : P[V <= x] >= u } for u in [0, 1].
  virtual double quantile(double u) const = 0;

  /// Largest price p with survival(p) >= q (q in [0, 1]); the price at which
  /// the sale probability is exactly q wherever the CDF is continuous.
  virtual double price_at_quantile(double q) const = 0;

  /// Smallest maximizer of p * survival(p) and the revenue it earns.
  virtual MonopolyResult monopoly() const = 0;

  /// Smallest maximizer of p * survival(p) over p >= floor. A floor above the
  /// support returns (floor, 0).
  virtual MonopolyResult monopoly_at_least(double floor) const = 0;

  virtual double support_min() const = 0;
  virtual double support_max() const = 0;  // +inf when unbounded
  virtual bool bounded_support() const = 0;

  /// Family tag, matching the JSON schema ("discrete", "uniform", ...).
  virtual std::string family() const = 0;
};

using PriorPtr = std::shared_ptr<const Prior>;

/// Finite-support distribution: strictly ascending nonnegative values with
/// positive probabilities. Probabilities are normalized on construction and
/// must sum to 1 within 1e-9 beforehand.
class DiscretePrior final : public Prior {
 public:
  DiscretePrior(std::vector<double> values, std::vector<double> probs);

  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return values_.size(); }

  /// P[V <= values[i]]
  double cum_prob(std::size_t i) const { return cum_[i]; }
  /// P[V >= values[i]]
  double survival_at(std::size_t i) const { return surv_[i]; }

  double cdf_strict(double v) const override;
  double mean() const override { return mean_; }
  double partial_expectation(double a) const override;
  double cdf_integral(double v) const override;
  double quantile(double u) const override;
  double price_at_quantile(double q) const override;
  MonopolyResult monopoly() const override;
  MonopolyResult monopoly_at_least(double floor) const override;
  double support_min() const override { return values_.front(); }
  double support_max() const override { return values_.back(); }
  bool bounded_support() const override { return true; }
  std::string family() const override { return "discrete"; }

 private:
  std::vector<double> values_;
  std::vector<double> probs_;
  std::vector<double> cum_;   // prefix sums, cum_[i] = P[V <= v_i]
  std::vector<double> surv_;  // suffix sums, surv_[i] = P[V >= v_i]
  double mean_ = 0.0;
};

/// Uniform distribution on [lo, hi], 0 <= lo < hi.
class UniformPrior final : public Prior {
 public:
  UniformPrior(double lo, double hi);
  double lo() const { return lo_; }
  double hi() const { return hi_; }

  double cdf_strict(double v) const override;
  double mean() const override { return 0.5 * (lo_ + hi_); }
  double partial_expectation(double a) const override;
  double cdf_integral(double v) const override;
  double quantile(double u) const override;
  double price_at_quantile(double q) const override;
  MonopolyResult monopoly() const override;
  MonopolyResult monopoly_at_least(double floor) const override;
  double support_min() const override { return lo_; }
  double support_max() const override { return hi_; }
  bool bounded_support() const override { return true; }
  std::string family() const override { return "uniform"; }

 private:
  double lo_, hi_;
};

/// Exponential distribution with the given rate; support [0, inf).
class ExponentialPrior final : public Prior {
 public:
  explicit ExponentialPrior(double rate);
  double rate() const { return rate_; }

  double cdf_strict(double v) const override;
  double mean() const override { return 1.0 / rate_; }
  double partial_expectation(double a) const override;
  double cdf_integral(double v) const override;
  double quantile(double u) const override;
  double price_at_quantile(double q) const override;
  MonopolyResult monopoly() const override;
  MonopolyResult monopoly_at_least(double floor) const override;
  double support_min() const override { return 0.0; }
  double support_max() const override { return std::numeric_limits<double>::infinity(); }
  bool bounded_support() const override { return false; }
  std::string family() const override { return "exponential"; }

 private:
  double rate_;
};

/// Equal-revenue distribution truncated at M > 1: density 1/v^2 on [1, M)
/// plus an atom of mass 1/M at M. Every price in [1, M] earns revenue 1.
class EqualRevenuePrior final : public Prior {
 public:
  explicit EqualRevenuePrior(double truncation);
  double truncation() const { return m_; }

  double cdf_strict(double v) const override;
  double mean() const override;
  double partial_expectation(double a) const override;
  double cdf_integral(double v) const override;
  double quantile(double u) const override;
  double price_at_quantile(double q) const override;
  MonopolyResult monopoly() const override;
  MonopolyResult monopoly_at_least(double floor) const override;
  double support_min() const override { return 1.0; }
  double support_max() const override { return m_; }
  bool bounded_support() const override { return true; }
  std::string family() const override { return "equal_revenue"; }

 private:
  double m_;
};

/// Deterministic value v0 >= 0.
class PointMassPrior final : public Prior {
 public:
  explicit PointMassPrior(double value);
  double value() const { return v0_; }

  double cdf_strict(double v) const override { return v > v0_ ? 1.0 : 0.0; }
  double mean() const override { return v0_; }
  double partial_expectation(double a) const override { return a >= v0_ ? v0_ : 0.0; }
  double cdf_integral(double v) const override { return v > v0_ ? v - v0_ : 0.0; }
  double quantile(double /*u*/) const override { return v0_; }
  double price_at_quantile(double /*q*/) const override { return v0_; }
  MonopolyResult monopoly() const override { return {v0_, v0_}; }
  MonopolyResult monopoly_at_least(double floor) const override;
  double support_min() const override { return v0_; }
  double support_max() const override { return v0_; }
  bool bounded_support() const override { return true; }
  std::string family() const override { return "point_mass"; }

 private:
  double v0_;
};

/// Distribution defined by a piecewise-linear revenue curve in value space.
///
/// Pieces live on (knots[j], knots[j+1]] and carry rho_j(p) = a_j + b_j * p,
/// where rho(p) = p * survival(p) is the revenue earned by posting price p.
/// Beyond the last knot rho == 0. A downward jump of rho at a knot is an atom
/// there; upward jumps are rejected. The first piece must be rho(p) = p
/// (no mass below the first interior knot). This family houses the
/// adversarial priors whose revenue curve is triangular or envelope-shaped
/// in value space.
class PiecewisePrior final : public Prior {
 public:
  struct Piece {
    double a = 0.0;
    double b = 0.0;
  };

  /// knots.size() == pieces.size() + 1, knots.front() == 0.
  PiecewisePrior(std::vector<double> knots, std::vector<Piece> pieces);

  const std::vector<double>& knots() const { return knots_; }
  const std::vector<Piece>& pieces() const { return pieces_; }

  /// rho(p) = p * survival(p), left-continuous in p.
  double revenue_at(double p) const;
  /// Atom mass carried at knot index k (k >= 1).
  double atom_mass(std::size_t k) const;

  double cdf_strict(double v) const override;
  double mean() const override { return mean_; }
  double partial_expectation(double a) const override;
  double cdf_integral(double v) const override;
  double quantile(double u) const override;
  double price_at_quantile(double q) const override;
  MonopolyResult monopoly() const override;
  MonopolyResult monopoly_at_least(double floor) const override;
  double support_min() const override;
  double support_max() const override { return knots_.back(); }
  bool bounded_support() const override { return true; }
  std::string family() const override { return "piecewise"; }

 private:
  std::size_t piece_index(double v) const;  // piece containing v in (k_j, k_{j+1}]

  std::vector<double> knots_;
  std::vector<Piece> pieces_;
  double mean_ = 0.0;
};

/// Revenue in quantile space: r(q) = q * price_at_quantile(q) on an
/// evaluation grid, its running max r_plus, the smallest maximizing quantile
/// q_star, and opt = max r. For discrete priors the grid always contains the
/// exact survival breakpoints, so opt matches monopoly revenue exactly.
struct RevenueCurve {
  std::vector<double> q;
  std::vector<double> r;
  std::vector<double> r_plus;
  double q_star = 0.0;
  double opt = 0.0;
};

RevenueCurve revenue_curve(const Prior& prior, std::size_t grid_size);

/// Quantile-midpoint discretization: n atoms at quantile((i + 0.5) / n), each
/// of mass 1/n, duplicates merged. Requires bounded support.
DiscretePrior discretize(const Prior& prior, std::size_t n);

}  // namespace pricinglab
