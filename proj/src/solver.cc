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

#include "matgame/solver.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "dense_linalg.h"

namespace matgame {
namespace {

// maximize v  s.t.  v - (x^T B)_j <= 0 for all j, sum x = 1, x >= 0.
// Variables are (x_0 .. x_{m-1}, v).
LinearProgram RowValueProgram(const GameMatrix& b) {
  const std::size_t m = b.rows();
  const std::size_t n = b.cols();
  LinearProgram lp;
  lp.objective.assign(m + 1, 0.0);
  lp.objective[m] = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> row(m + 1, 0.0);
    for (std::size_t i = 0; i < m; ++i) row[i] = -b(i, j);
    row[m] = 1.0;
    lp.ineq_lhs.push_back(std::move(row));
    lp.ineq_rhs.push_back(0.0);
  }
  std::vector<double> sum(m + 1, 1.0);
  sum[m] = 0.0;
  lp.eq_lhs.push_back(std::move(sum));
  lp.eq_rhs.push_back(1.0);
  lp.lower_bounds.assign(m + 1, 0.0);
  lp.lower_bounds[m] = -kInf;
  return lp;
}

// maximize -w  s.t.  (B y)_i - w <= 0 for all i, sum y = 1, y >= 0.
LinearProgram ColValueProgram(const GameMatrix& b) {
  const std::size_t m = b.rows();
  const std::size_t n = b.cols();
  LinearProgram lp;
  lp.objective.assign(n + 1, 0.0);
  lp.objective[n] = -1.0;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> row(n + 1, 0.0);
    for (std::size_t j = 0; j < n; ++j) row[j] = b(i, j);
    row[n] = -1.0;
    lp.ineq_lhs.push_back(std::move(row));
    lp.ineq_rhs.push_back(0.0);
  }
  std::vector<double> sum(n + 1, 1.0);
  sum[n] = 0.0;
  lp.eq_lhs.push_back(std::move(sum));
  lp.eq_rhs.push_back(1.0);
  lp.lower_bounds.assign(n + 1, 0.0);
  lp.lower_bounds[n] = -kInf;
  return lp;
}

LPSolution RequireOptimal(const LinearProgram& lp, double feas_tol,
                          const char* what) {
  LPSolution s = SolveLP(lp, feas_tol);
  if (s.status != LPStatus::kOptimal) {
    throw InternalInconsistency(std::string(what) + " LP returned " +
                                LPStatusName(s.status));
  }
  return s;
}

// Advances `idx` to the next k-subset of {0..n-1} in lexicographic order.
bool NextCombination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Solves sum_{i in I} x_i a_{ij} = v (j in J), sum x_i = 1 for (x_I, v).
// With transpose=true the roles of rows and columns swap.
std::optional<std::vector<double>> Equalize(const GameMatrix& a,
                                            const std::vector<std::size_t>& own,
                                            const std::vector<std::size_t>& other,
                                            bool transpose) {
  const std::size_t k = own.size();
  const std::size_t dim = k + 1;
  std::vector<double> m(dim * dim, 0.0);
  std::vector<double> rhs(dim, 0.0);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      m[r * dim + c] = transpose ? a(other[r], own[c]) : a(own[c], other[r]);
    }
    m[r * dim + k] = -1.0;
  }
  for (std::size_t c = 0; c < k; ++c) m[k * dim + c] = 1.0;
  rhs[k] = 1.0;
  return internal::SolveSquare(std::move(m), std::move(rhs), dim);
}

std::optional<std::vector<double>> Scatter(const std::vector<double>& local,
                                           const std::vector<std::size_t>& support,
                                           std::size_t size) {
  std::vector<double> full(size, 0.0);
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (local[i] < -kNegativeClampTol) return std::nullopt;
    full[support[i]] = std::max(local[i], 0.0);
  }
  return full;
}

}  // namespace

GameSolution SolveGame(const GameMatrix& a, double tol, double lp_feas_tol) {
  if (!(tol > 0.0)) throw InputError("solve_game: tol must be positive");
  const double min_entry = a.min_entry();
  const double shift = min_entry < 1.0 ? 1.0 - min_entry : 0.0;
  const GameMatrix b = shift == 0.0 ? a : a.shifted(shift);

  const LPSolution row = RequireOptimal(RowValueProgram(b), lp_feas_tol, "row");
  const LPSolution col = RequireOptimal(ColValueProgram(b), lp_feas_tol, "column");

  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  MixedStrategy x = ValidateStrategy(
      std::span<const double>(row.point.data(), m), Player::kRow);
  MixedStrategy y = ValidateStrategy(
      std::span<const double>(col.point.data(), n), Player::kCol);

  const double floor = RowGuarantee(a, x.weights());
  const double ceiling = ColCeiling(a, y.weights());
  const double gap = std::max(ceiling - floor, 0.0);
  const double value = row.objective_value - shift;
  if (gap > tol) {
    throw InternalInconsistency("solve_game: duality gap " +
                                std::to_string(gap) + " exceeds tolerance");
  }
  return GameSolution{.value = value,
                      .row_strategy = std::move(x),
                      .col_strategy = std::move(y),
                      .duality_gap = gap,
                      .tolerance = tol};
}

OracleSolution OracleSolve(const GameMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (m > kOracleMaxDim || n > kOracleMaxDim) {
    throw InputError("oracle_solve is limited to " +
                     std::to_string(kOracleMaxDim) + "x" +
                     std::to_string(kOracleMaxDim) + " games");
  }
  for (std::size_t k = 1; k <= std::min(m, n); ++k) {
    std::vector<std::size_t> rows(k);
    for (std::size_t i = 0; i < k; ++i) rows[i] = i;
    do {
      std::vector<std::size_t> cols(k);
      for (std::size_t j = 0; j < k; ++j) cols[j] = j;
      do {
        const auto xs = Equalize(a, rows, cols, /*transpose=*/false);
        const auto ys = Equalize(a, cols, rows, /*transpose=*/true);
        if (!xs || !ys) continue;
        const auto x = Scatter(*xs, rows, m);
        const auto y = Scatter(*ys, cols, n);
        if (!x || !y) continue;
        const double v = (*xs)[k];
        if (RowGuarantee(a, *x) < v - kOracleDeviationTol) continue;
        if (ColCeiling(a, *y) > v + kOracleDeviationTol) continue;
        return OracleSolution{
            .value = v,
            .row_support = rows,
            .col_support = cols,
            .row_strategy = ValidateStrategy(*x, Player::kRow),
            .col_strategy = ValidateStrategy(*y, Player::kCol)};
      } while (NextCombination(cols, n));
    } while (NextCombination(rows, m));
  }
  throw InternalInconsistency("oracle_solve: no valid support pair found");
}

bool IsOptimalDominated(const GameMatrix& a, const MixedStrategy& s, double v,
                        double tol) {
  const std::vector<double> payoffs = s.player() == Player::kRow
                                          ? a.left_multiply(s.weights())
                                          : a.right_multiply(s.weights());
  double worst = 0.0;
  for (double p : payoffs) worst = std::max(worst, std::abs(p - v));
  return worst <= tol;
}

RowOptimaAudit AuditRowOptima(const GameMatrix& a, double v, double tol,
                              double lp_feas_tol) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const double slack = 1e-3 * tol;

  LinearProgram lp;
  lp.objective.assign(m, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<double> row(m);
    for (std::size_t i = 0; i < m; ++i) row[i] = -a(i, k);
    lp.ineq_lhs.push_back(std::move(row));
    lp.ineq_rhs.push_back(-(v - slack));
  }
  lp.eq_lhs.push_back(std::vector<double>(m, 1.0));
  lp.eq_rhs.push_back(1.0);

  RowOptimaAudit audit;
  audit.all_dominated = true;
  for (std::size_t j = 0; j < n; ++j) {
    for (double sense : {1.0, -1.0}) {
      for (std::size_t i = 0; i < m; ++i) lp.objective[i] = sense * a(i, j);
      const LPSolution s = SolveLP(lp, lp_feas_tol);
      if (s.status == LPStatus::kInfeasible) {
        throw InputError("no row strategy guarantees " + std::to_string(v) +
                         "; v exceeds the game value");
      }
      if (s.status != LPStatus::kOptimal) {
        throw InternalInconsistency("optimal-strategy polytope is unbounded");
      }
      const double extreme = sense * s.objective_value;
      (sense > 0 ? audit.column_max : audit.column_min).push_back(extreme);
      if (std::abs(extreme - v) > tol) audit.all_dominated = false;
    }
  }
  return audit;
}

bool AllRowOptimaDominated(const GameMatrix& a, double v, double tol,
                           double lp_feas_tol) {
  return AuditRowOptima(a, v, tol, lp_feas_tol).all_dominated;
}

}  // namespace matgame
