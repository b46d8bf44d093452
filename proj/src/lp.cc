// Copyright 2026 The matgame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "matgame/lp.h"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>

#include "matgame/core.h"

namespace matgame {
namespace {

// One original variable expressed through nonnegative tableau columns:
// z = offset + sum(sign_i * u[col_i]).
struct VariableMap {
  double offset = 0.0;
  std::vector<std::pair<std::size_t, double>> terms;
};

enum class RowKind { kLessEqual, kEqual };

struct StandardRow {
  std::vector<double> coeffs;  // over the structural columns
  double rhs = 0.0;
  RowKind kind = RowKind::kLessEqual;
};

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_((rows + 1) * (cols + 1), 0.0),
        basis_(rows, 0) {}

  double& at(std::size_t r, std::size_t c) { return data_[r * (cols_ + 1) + c]; }
  double at(std::size_t r, std::size_t c) const {
    return data_[r * (cols_ + 1) + c];
  }
  double& rhs(std::size_t r) { return at(r, cols_); }
  double rhs(std::size_t r) const { return at(r, cols_); }
  // The objective row lives at index rows_. Its entries are reduced costs
  // (maximization: a positive entry improves), its rhs is -objective.
  double& cost(std::size_t c) { return at(rows_, c); }
  double cost(std::size_t c) const { return at(rows_, c); }
  double objective() const { return -at(rows_, cols_); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }
  const std::vector<std::size_t>& basis() const { return basis_; }

  void Pivot(std::size_t pr, std::size_t pc) {
    const double p = at(pr, pc);
    for (std::size_t c = 0; c <= cols_; ++c) at(pr, c) /= p;
    at(pr, pc) = 1.0;
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      const double f = at(r, pc);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c <= cols_; ++c) at(r, c) -= f * at(pr, c);
      at(r, pc) = 0.0;
    }
    basis_[pr] = pc;
  }

  // Resets the objective row to the given costs and prices out the basis.
  void SetObjective(const std::vector<double>& costs, double constant) {
    for (std::size_t c = 0; c < cols_; ++c) cost(c) = costs[c];
    at(rows_, cols_) = -constant;
    for (std::size_t r = 0; r < rows_; ++r) {
      const double cb = cost(basis_[r]);
      if (cb == 0.0) continue;
      for (std::size_t c = 0; c <= cols_; ++c) at(rows_, c) -= cb * at(r, c);
    }
  }

  void DropRow(std::size_t r) {
    const std::size_t w = cols_ + 1;
    data_.erase(data_.begin() + static_cast<std::ptrdiff_t>(r * w),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * w));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --rows_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
  std::vector<std::size_t> basis_;
};

enum class PhaseResult { kOptimal, kUnbounded };

// Runs Bland's rule until no column in [0, allowed_cols) has positive reduced
// cost.
PhaseResult RunSimplex(Tableau& t, std::size_t allowed_cols, int& iterations,
                       int iteration_limit) {
  while (true) {
    std::optional<std::size_t> entering;
    for (std::size_t c = 0; c < allowed_cols; ++c) {
      if (t.cost(c) > kPivotTol) {
        entering = c;
        break;
      }
    }
    if (!entering) return PhaseResult::kOptimal;

    std::optional<std::size_t> leaving;
    double best_ratio = kInf;
    for (std::size_t r = 0; r < t.rows(); ++r) {
      const double a = t.at(r, *entering);
      if (a <= kPivotTol) continue;
      const double ratio = std::max(t.rhs(r), 0.0) / a;
      const double slack = 1e-12 * (1.0 + std::abs(best_ratio));
      if (!leaving || ratio < best_ratio - slack) {
        leaving = r;
        best_ratio = ratio;
      } else if (ratio <= best_ratio + slack &&
                 t.basis()[r] < t.basis()[*leaving]) {
        leaving = r;
        best_ratio = std::min(best_ratio, ratio);
      }
    }
    if (!leaving) return PhaseResult::kUnbounded;

    if (++iterations > iteration_limit) {
      throw IterationLimitError("simplex exceeded " +
                                std::to_string(iteration_limit) + " pivots");
    }
    t.Pivot(*leaving, *entering);
  }
}

void CheckDimensions(const LinearProgram& p) {
  const std::size_t n = p.num_variables();
  if (p.ineq_lhs.size() != p.ineq_rhs.size()) {
    throw InputError("LP: inequality lhs/rhs row counts differ");
  }
  if (p.eq_lhs.size() != p.eq_rhs.size()) {
    throw InputError("LP: equality lhs/rhs row counts differ");
  }
  for (const auto& row : p.ineq_lhs) {
    if (row.size() != n) throw InputError("LP: inequality row has wrong width");
  }
  for (const auto& row : p.eq_lhs) {
    if (row.size() != n) throw InputError("LP: equality row has wrong width");
  }
  if (!p.lower_bounds.empty() && p.lower_bounds.size() != n) {
    throw InputError("LP: lower bound count differs from variable count");
  }
  if (!p.upper_bounds.empty() && p.upper_bounds.size() != n) {
    throw InputError("LP: upper bound count differs from variable count");
  }
  auto finite_all = [](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(),
                       [](double x) { return std::isfinite(x); });
  };
  bool ok = finite_all(p.objective) && finite_all(p.ineq_rhs) &&
            finite_all(p.eq_rhs);
  for (const auto& row : p.ineq_lhs) ok = ok && finite_all(row);
  for (const auto& row : p.eq_lhs) ok = ok && finite_all(row);
  if (!ok) throw InputError("LP: non-finite coefficient");
  for (double l : p.lower_bounds) {
    if (std::isnan(l) || l == kInf) throw InputError("LP: invalid lower bound");
  }
  for (double u : p.upper_bounds) {
    if (std::isnan(u) || u == -kInf) throw InputError("LP: invalid upper bound");
  }
}

double LowerOf(const LinearProgram& p, std::size_t k) {
  return p.lower_bounds.empty() ? 0.0 : p.lower_bounds[k];
}
double UpperOf(const LinearProgram& p, std::size_t k) {
  return p.upper_bounds.empty() ? kInf : p.upper_bounds[k];
}

}  // namespace

const char* LPStatusName(LPStatus s) {
  switch (s) {
    case LPStatus::kOptimal:
      return "Optimal";
    case LPStatus::kInfeasible:
      return "Infeasible";
    case LPStatus::kUnbounded:
      return "Unbounded";
  }
  return "?";
}

double PrimalResidual(const LinearProgram& p, const std::vector<double>& z) {
  double worst = 0.0;
  for (std::size_t r = 0; r < p.ineq_lhs.size(); ++r) {
    double s = 0.0;
    for (std::size_t k = 0; k < z.size(); ++k) s += p.ineq_lhs[r][k] * z[k];
    worst = std::max(worst, s - p.ineq_rhs[r]);
  }
  for (std::size_t r = 0; r < p.eq_lhs.size(); ++r) {
    double s = 0.0;
    for (std::size_t k = 0; k < z.size(); ++k) s += p.eq_lhs[r][k] * z[k];
    worst = std::max(worst, std::abs(s - p.eq_rhs[r]));
  }
  for (std::size_t k = 0; k < z.size(); ++k) {
    worst = std::max(worst, LowerOf(p, k) - z[k]);
    worst = std::max(worst, z[k] - UpperOf(p, k));
  }
  return worst;
}

LPSolution SolveLP(const LinearProgram& p, double feas_tol) {
  CheckDimensions(p);
  if (!(feas_tol > 0.0)) throw InputError("LP: feas_tol must be positive");
  const std::size_t n = p.num_variables();

  for (std::size_t k = 0; k < n; ++k) {
    if (LowerOf(p, k) > UpperOf(p, k)) return LPSolution{};
  }

  // Map every variable onto nonnegative structural columns.
  std::vector<VariableMap> vars(n);
  std::size_t structural = 0;
  std::vector<StandardRow> bound_rows;
  std::vector<std::pair<std::size_t, double>> bound_specs;  // column, width
  for (std::size_t k = 0; k < n; ++k) {
    const double lo = LowerOf(p, k);
    const double hi = UpperOf(p, k);
    if (std::isfinite(lo)) {
      vars[k].offset = lo;
      vars[k].terms.push_back({structural, 1.0});
      if (std::isfinite(hi)) bound_specs.push_back({structural, hi - lo});
      ++structural;
    } else if (std::isfinite(hi)) {
      vars[k].offset = hi;
      vars[k].terms.push_back({structural++, -1.0});
    } else {
      vars[k].terms.push_back({structural++, 1.0});
      vars[k].terms.push_back({structural++, -1.0});
    }
  }

  auto translate = [&](const std::vector<double>& coeffs, double rhs,
                       RowKind kind) {
    StandardRow row{std::vector<double>(structural, 0.0), rhs, kind};
    for (std::size_t k = 0; k < n; ++k) {
      if (coeffs[k] == 0.0) continue;
      row.rhs -= coeffs[k] * vars[k].offset;
      for (auto [col, sign] : vars[k].terms) row.coeffs[col] += sign * coeffs[k];
    }
    return row;
  };

  std::vector<StandardRow> rows;
  for (std::size_t r = 0; r < p.ineq_lhs.size(); ++r) {
    rows.push_back(translate(p.ineq_lhs[r], p.ineq_rhs[r], RowKind::kLessEqual));
  }
  for (std::size_t r = 0; r < p.eq_lhs.size(); ++r) {
    rows.push_back(translate(p.eq_lhs[r], p.eq_rhs[r], RowKind::kEqual));
  }
  for (auto [col, width] : bound_specs) {
    StandardRow row{std::vector<double>(structural, 0.0), width,
                    RowKind::kLessEqual};
    row.coeffs[col] = 1.0;
    rows.push_back(std::move(row));
  }

  // Column layout: structural | slacks (one per <= row) | artificials.
  std::size_t num_slacks = 0;
  for (const auto& r : rows) num_slacks += (r.kind == RowKind::kLessEqual);
  std::size_t num_artificial = 0;
  for (const auto& r : rows) {
    if (r.kind == RowKind::kEqual || r.rhs < 0.0) ++num_artificial;
  }
  const std::size_t first_slack = structural;
  const std::size_t first_artificial = structural + num_slacks;
  const std::size_t total_cols = first_artificial + num_artificial;

  Tableau t(rows.size(), total_cols);
  std::size_t slack = first_slack;
  std::size_t artificial = first_artificial;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const StandardRow& row = rows[r];
    const double sign = row.rhs < 0.0 ? -1.0 : 1.0;
    for (std::size_t c = 0; c < structural; ++c) t.at(r, c) = sign * row.coeffs[c];
    t.rhs(r) = sign * row.rhs;
    std::optional<std::size_t> basic;
    if (row.kind == RowKind::kLessEqual) {
      t.at(r, slack) = sign;
      if (sign > 0.0) basic = slack;
      ++slack;
    }
    if (!basic) {
      t.at(r, artificial) = 1.0;
      basic = artificial++;
    }
    t.basis()[r] = *basic;
  }

  const int iteration_limit = static_cast<int>(50 * (total_cols + rows.size()));
  LPSolution out;

  // Phase 1: maximize -sum(artificials).
  if (num_artificial > 0) {
    std::vector<double> phase1(total_cols, 0.0);
    for (std::size_t c = first_artificial; c < total_cols; ++c) phase1[c] = -1.0;
    t.SetObjective(phase1, 0.0);
    RunSimplex(t, total_cols, out.iterations, iteration_limit);
    if (-t.objective() > feas_tol) {
      out.status = LPStatus::kInfeasible;
      return out;
    }
    // Drive remaining artificials out of the basis; drop redundant rows.
    for (std::size_t r = 0; r < t.rows();) {
      if (t.basis()[r] < first_artificial) {
        ++r;
        continue;
      }
      std::optional<std::size_t> best;
      double best_mag = kPivotTol;
      for (std::size_t c = 0; c < first_artificial; ++c) {
        if (std::abs(t.at(r, c)) > best_mag) {
          best_mag = std::abs(t.at(r, c));
          best = c;
        }
      }
      if (best) {
        t.Pivot(r, *best);
        ++r;
      } else {
        t.DropRow(r);
      }
    }
  }

  // Phase 2 over structural and slack columns only.
  std::vector<double> costs(total_cols, 0.0);
  double constant = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    constant += p.objective[k] * vars[k].offset;
    for (auto [col, sign] : vars[k].terms) costs[col] += sign * p.objective[k];
  }
  t.SetObjective(costs, constant);
  if (RunSimplex(t, first_artificial, out.iterations, iteration_limit) ==
      PhaseResult::kUnbounded) {
    out.status = LPStatus::kUnbounded;
    return out;
  }

  std::vector<double> u(total_cols, 0.0);
  for (std::size_t r = 0; r < t.rows(); ++r) u[t.basis()[r]] = t.rhs(r);
  out.point.assign(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    double z = vars[k].offset;
    for (auto [col, sign] : vars[k].terms) z += sign * u[col];
    out.point[k] = z;
  }
  out.status = LPStatus::kOptimal;
  out.objective_value = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    out.objective_value += p.objective[k] * out.point[k];
  }
  out.primal_residual = PrimalResidual(p, out.point);
  return out;
}

}  // namespace matgame
