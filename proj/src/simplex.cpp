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

#include "pricinglab/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "pricinglab/errors.hpp"

namespace pricinglab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPivotEps = 1e-9;
constexpr double kCostEps = 1e-9;
constexpr double kDegenerateEps = 1e-12;
constexpr int kMaxIterations = 200000;
constexpr int kBlandTrigger = 40;  // consecutive degenerate pivots

// Internal column bookkeeping: the caller-visible variable j maps to one or
// two tableau columns after shifting lower bounds and splitting free vars.
struct ColMap {
  int pos = -1;     // column of the positive part
  int neg = -1;     // column of the negative part (free split)
  double shift = 0.0;
  bool negated = false;  // x = upper - y substitution
};

struct Tableau {
  std::vector<std::vector<double>> a;  // m x ncols
  std::vector<double> b;               // m
  std::vector<int> basis;              // m
  std::size_t m = 0, ncols = 0;
};

void pivot(Tableau& t, std::vector<double>& cost_row, double& zvalue, std::size_t row,
           std::size_t col) {
  double inv = 1.0 / t.a[row][col];
  for (auto& v : t.a[row]) v *= inv;
  t.b[row] *= inv;
  t.a[row][col] = 1.0;
  for (std::size_t i = 0; i < t.m; ++i) {
    if (i == row) continue;
    double f = t.a[i][col];
    if (std::abs(f) < 1e-30) continue;
    for (std::size_t j = 0; j < t.ncols; ++j) t.a[i][j] -= f * t.a[row][j];
    t.a[i][col] = 0.0;
    t.b[i] -= f * t.b[row];
    if (t.b[i] < 0.0 && t.b[i] > -1e-12) t.b[i] = 0.0;
  }
  double f = cost_row[col];
  if (std::abs(f) > 0.0) {
    for (std::size_t j = 0; j < t.ncols; ++j) cost_row[j] -= f * t.a[row][j];
    cost_row[col] = 0.0;
    zvalue += f * t.b[row];
  }
  t.basis[row] = static_cast<int>(col);
}

/// Runs simplex iterations for max cost.x given an all-slack/artificial
/// feasible basis; cost_row holds reduced costs, zvalue the objective.
/// allowed[j] == false columns never enter.
LpStatus iterate(Tableau& t, std::vector<double>& cost_row, double& zvalue,
                 const std::vector<char>& allowed, int& iterations) {
  bool bland = false;
  int degenerate_run = 0;
  for (;;) {
    if (++iterations > kMaxIterations) return LpStatus::iteration_limit;
    // entering column
    std::size_t enter = t.ncols;
    if (bland) {
      for (std::size_t j = 0; j < t.ncols; ++j) {
        if (allowed[j] && cost_row[j] > kCostEps) {
          enter = j;
          break;
        }
      }
    } else {
      double best = kCostEps;
      for (std::size_t j = 0; j < t.ncols; ++j) {
        if (allowed[j] && cost_row[j] > best) {
          best = cost_row[j];
          enter = j;
        }
      }
    }
    if (enter == t.ncols) return LpStatus::optimal;

    // ratio test: ties resolved toward the largest pivot magnitude for
    // stability, or the smallest basis index when Bland's rule is active
    std::size_t leave = t.m;
    double best_ratio = kInf;
    for (std::size_t i = 0; i < t.m; ++i) {
      if (t.a[i][enter] <= kPivotEps) continue;
      double ratio = t.b[i] / t.a[i][enter];
      if (ratio < best_ratio - 1e-12) {
        best_ratio = ratio;
        leave = i;
      } else if (ratio < best_ratio + 1e-12 && leave != t.m) {
        bool better = bland ? t.basis[i] < t.basis[leave]
                            : t.a[i][enter] > t.a[leave][enter];
        if (better) {
          best_ratio = std::min(best_ratio, ratio);
          leave = i;
        }
      }
    }
    if (leave == t.m) return LpStatus::unbounded;

    if (best_ratio < kDegenerateEps) {
      if (++degenerate_run >= kBlandTrigger) bland = true;
    } else {
      degenerate_run = 0;
    }
    pivot(t, cost_row, zvalue, leave, enter);
  }
}

}  // namespace

LpSolution solve_standard(const StandardLp& lp) {
  const std::size_t nvars = lp.objective.size();
  if (!lp.bounds.empty() && lp.bounds.size() != nvars)
    throw_invalid("solve_standard: bounds size mismatch");
  for (const auto& row : lp.rows) {
    if (row.coeffs.size() != nvars) throw_invalid("solve_standard: row width mismatch");
  }

  // --- canonicalize variables to columns with implicit x >= 0
  std::vector<ColMap> cols(nvars);
  std::size_t nstruct = 0;
  double obj_const = 0.0;
  struct ExtraRow {
    std::size_t var;
    double rhs;
  };
  std::vector<ExtraRow> upper_rows;
  for (std::size_t j = 0; j < nvars; ++j) {
    VarBound bd = lp.bounds.empty() ? VarBound{} : lp.bounds[j];
    if (bd.upper < bd.lower) return {LpStatus::infeasible, 0.0, {}, 0.0, 0};
    ColMap& cm = cols[j];
    if (bd.lower == -kInf && bd.upper == kInf) {
      cm.pos = static_cast<int>(nstruct++);
      cm.neg = static_cast<int>(nstruct++);
    } else if (bd.lower == -kInf) {
      // x = upper - y, y >= 0
      cm.pos = static_cast<int>(nstruct++);
      cm.negated = true;
      cm.shift = bd.upper;
    } else {
      cm.pos = static_cast<int>(nstruct++);
      cm.shift = bd.lower;
      if (bd.upper < kInf) upper_rows.push_back({j, bd.upper - bd.lower});
    }
  }

  const std::size_t nrows = lp.rows.size() + upper_rows.size();
  std::vector<std::vector<double>> rowco(nrows, std::vector<double>(nstruct, 0.0));
  std::vector<double> rhs(nrows, 0.0);
  std::vector<RowSense> sense(nrows, RowSense::less_equal);

  auto scatter = [&](std::size_t r, std::size_t var, double coef) {
    const ColMap& cm = cols[var];
    if (cm.negated) {
      rowco[r][cm.pos] -= coef;
      rhs[r] -= coef * cm.shift;
    } else {
      rowco[r][cm.pos] += coef;
      if (cm.neg >= 0) rowco[r][cm.neg] -= coef;
      rhs[r] -= coef * cm.shift;
    }
  };
  for (std::size_t r = 0; r < lp.rows.size(); ++r) {
    sense[r] = lp.rows[r].sense;
    rhs[r] = lp.rows[r].rhs;
    for (std::size_t j = 0; j < nvars; ++j) {
      double coef = lp.rows[r].coeffs[j];
      if (coef != 0.0) scatter(r, j, coef);
    }
  }
  for (std::size_t k = 0; k < upper_rows.size(); ++k) {
    std::size_t r = lp.rows.size() + k;
    rowco[r][cols[upper_rows[k].var].pos] = 1.0;
    rhs[r] = upper_rows[k].rhs;
    sense[r] = RowSense::less_equal;
  }

  std::vector<double> cost(nstruct, 0.0);
  for (std::size_t j = 0; j < nvars; ++j) {
    double c = lp.objective[j];
    const ColMap& cm = cols[j];
    if (cm.negated) {
      cost[cm.pos] -= c;
      obj_const += c * cm.shift;
    } else {
      cost[cm.pos] += c;
      if (cm.neg >= 0) cost[cm.neg] -= c;
      obj_const += c * cm.shift;
    }
  }

  // --- flip rows to rhs >= 0; zero-rhs >= rows flip to <= so the slack
  // basis stays feasible without artificials
  for (std::size_t r = 0; r < nrows; ++r) {
    if (rhs[r] < 0.0 || (rhs[r] == 0.0 && sense[r] == RowSense::greater_equal)) {
      for (auto& v : rowco[r]) v = -v;
      rhs[r] = -rhs[r];
      if (sense[r] == RowSense::less_equal)
        sense[r] = RowSense::greater_equal;
      else if (sense[r] == RowSense::greater_equal)
        sense[r] = RowSense::less_equal;
    }
  }
  std::size_t nslack = 0, nart = 0;
  for (std::size_t r = 0; r < nrows; ++r) {
    if (sense[r] != RowSense::equal) ++nslack;
    if (sense[r] != RowSense::less_equal) ++nart;
  }
  Tableau t;
  t.m = nrows;
  t.ncols = nstruct + nslack + nart;
  t.a.assign(nrows, std::vector<double>(t.ncols, 0.0));
  t.b = rhs;
  t.basis.assign(nrows, -1);
  std::vector<char> is_artificial(t.ncols, 0);
  {
    std::size_t slack_at = nstruct, art_at = nstruct + nslack;
    for (std::size_t r = 0; r < nrows; ++r) {
      std::copy(rowco[r].begin(), rowco[r].end(), t.a[r].begin());
      if (sense[r] == RowSense::less_equal) {
        t.a[r][slack_at] = 1.0;
        t.basis[r] = static_cast<int>(slack_at++);
      } else if (sense[r] == RowSense::greater_equal) {
        t.a[r][slack_at++] = -1.0;
        t.a[r][art_at] = 1.0;
        is_artificial[art_at] = 1;
        t.basis[r] = static_cast<int>(art_at++);
      } else {
        t.a[r][art_at] = 1.0;
        is_artificial[art_at] = 1;
        t.basis[r] = static_cast<int>(art_at++);
      }
    }
  }

  LpSolution out;
  std::vector<char> allowed(t.ncols, 1);

  // Keep the untouched canonical system to recover an exact basic solution
  // later, then break degenerate ties with a graded rhs perturbation. The
  // instances this library produces are massively degenerate at the origin
  // (hundreds of zero-rhs rows), which plain pivoting handles poorly.
  const std::vector<std::vector<double>> a0 = t.a;
  const std::vector<double> b0 = t.b;
  {
    double scale = 1.0;
    for (double v : t.b) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 0; i < t.m; ++i)
      t.b[i] += scale * 1e-9 * static_cast<double>(i + 1) / static_cast<double>(t.m);
  }

  // --- phase 1: drive artificials to zero
  if (nart > 0) {
    std::vector<double> cost_row(t.ncols, 0.0);
    double z = 0.0;
    // maximize -sum(artificials); price out the artificial basis
    for (std::size_t r = 0; r < nrows; ++r) {
      if (!is_artificial[t.basis[r]]) continue;
      for (std::size_t j = 0; j < t.ncols; ++j)
        if (!is_artificial[j]) cost_row[j] += t.a[r][j];
      z -= t.b[r];
    }
    for (std::size_t j = 0; j < t.ncols; ++j)
      if (is_artificial[j]) cost_row[j] = 0.0;
    LpStatus st = iterate(t, cost_row, z, allowed, out.iterations);
    if (st == LpStatus::iteration_limit) {
      out.status = st;
      return out;
    }
    if (z < -1e-7) {
      out.status = LpStatus::infeasible;
      return out;
    }
    // pivot remaining artificials out of the basis where possible
    for (std::size_t r = 0; r < nrows; ++r) {
      if (!is_artificial[t.basis[r]]) continue;
      std::size_t enter = t.ncols;
      for (std::size_t j = 0; j < nstruct + nslack; ++j) {
        if (std::abs(t.a[r][j]) > kPivotEps) {
          enter = j;
          break;
        }
      }
      if (enter < t.ncols) {
        double zdummy = 0.0;
        std::vector<double> dummy(t.ncols, 0.0);
        pivot(t, dummy, zdummy, r, enter);
      }
      // else: redundant row; the artificial stays basic at value 0
    }
    for (std::size_t j = 0; j < t.ncols; ++j)
      if (is_artificial[j]) allowed[j] = 0;
  }

  // --- phase 2
  std::vector<double> cost_row(t.ncols, 0.0);
  double z = 0.0;
  for (std::size_t j = 0; j < nstruct; ++j) cost_row[j] = cost[j];
  for (std::size_t r = 0; r < nrows; ++r) {
    int bj = t.basis[r];
    double cb = (bj >= 0 && static_cast<std::size_t>(bj) < nstruct) ? cost[bj] : 0.0;
    if (cb == 0.0) continue;
    for (std::size_t j = 0; j < t.ncols; ++j) cost_row[j] -= cb * t.a[r][j];
    z += cb * t.b[r];
  }
  LpStatus st = iterate(t, cost_row, z, allowed, out.iterations);
  if (st != LpStatus::optimal) {
    out.status = st;
    return out;
  }

  // --- strip the perturbation: solve B x_B = b0 for the final basis against
  // the original rhs (Gaussian elimination with partial pivoting)
  std::vector<double> colval(t.ncols, 0.0);
  {
    std::vector<std::vector<double>> basis_mat(nrows, std::vector<double>(nrows + 1, 0.0));
    for (std::size_t i = 0; i < nrows; ++i) {
      for (std::size_t r = 0; r < nrows; ++r) basis_mat[r][i] = a0[r][t.basis[i]];
      basis_mat[i][nrows] = 0.0;
    }
    for (std::size_t r = 0; r < nrows; ++r) basis_mat[r][nrows] = b0[r];
    bool singular = false;
    for (std::size_t col = 0; col < nrows && !singular; ++col) {
      std::size_t piv = col;
      for (std::size_t r = col + 1; r < nrows; ++r)
        if (std::abs(basis_mat[r][col]) > std::abs(basis_mat[piv][col])) piv = r;
      if (std::abs(basis_mat[piv][col]) < 1e-12) {
        singular = true;
        break;
      }
      std::swap(basis_mat[col], basis_mat[piv]);
      for (std::size_t r = 0; r < nrows; ++r) {
        if (r == col) continue;
        double f = basis_mat[r][col] / basis_mat[col][col];
        if (f == 0.0) continue;
        for (std::size_t cc = col; cc <= nrows; ++cc) basis_mat[r][cc] -= f * basis_mat[col][cc];
      }
    }
    if (!singular) {
      for (std::size_t i = 0; i < nrows; ++i) {
        double v = basis_mat[i][nrows] / basis_mat[i][i];
        if (v < 0.0 && v > -1e-8) v = 0.0;  // degenerate components land at 0
        colval[t.basis[i]] = v;
      }
    } else {
      for (std::size_t r = 0; r < nrows; ++r)
        if (t.basis[r] >= 0) colval[t.basis[r]] = t.b[r];
    }
  }
  z = 0.0;
  for (std::size_t j = 0; j < nstruct; ++j) z += cost[j] * colval[j];
  out.x.resize(nvars);
  for (std::size_t j = 0; j < nvars; ++j) {
    const ColMap& cm = cols[j];
    if (cm.negated)
      out.x[j] = cm.shift - colval[cm.pos];
    else
      out.x[j] = colval[cm.pos] - (cm.neg >= 0 ? colval[cm.neg] : 0.0) + cm.shift;
  }
  out.objective = z + obj_const;
  out.status = LpStatus::optimal;

  double viol = 0.0;
  for (const auto& row : lp.rows) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < nvars; ++j) lhs += row.coeffs[j] * out.x[j];
    if (row.sense == RowSense::less_equal) viol = std::max(viol, lhs - row.rhs);
    else if (row.sense == RowSense::greater_equal) viol = std::max(viol, row.rhs - lhs);
    else viol = std::max(viol, std::abs(lhs - row.rhs));
  }
  if (!lp.bounds.empty()) {
    for (std::size_t j = 0; j < nvars; ++j) {
      viol = std::max(viol, lp.bounds[j].lower - out.x[j]);
      viol = std::max(viol, out.x[j] - lp.bounds[j].upper);
    }
  } else {
    for (std::size_t j = 0; j < nvars; ++j) viol = std::max(viol, -out.x[j]);
  }
  out.max_violation = std::max(0.0, viol);
  return out;
}

}  // namespace pricinglab
