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

#ifndef MATGAME_SOLVER_H_
#define MATGAME_SOLVER_H_

#include <cstddef>
#include <vector>

#include "matgame/core.h"
#include "matgame/lp.h"

namespace matgame {

// Computes v(A) and one optimal strategy per player.
//
// The matrix is shifted by c = 1 - min(A) when min(A) < 1 so the value is
// positive. The row LP (maximize v s.t. x^T B >= v, sum x = 1, x >= 0) and the
// symmetric column LP are then solved independently and the value is shifted
// back. The returned duality gap is measured on the original matrix.
//
// Throws InternalInconsistency if either LP is not Optimal or the gap exceeds
// `tol`.
GameSolution SolveGame(const GameMatrix& a, double tol = 1e-9,
                       double lp_feas_tol = kDefaultFeasTol);

inline constexpr std::size_t kOracleMaxDim = 5;
inline constexpr double kOracleDeviationTol = 1e-8;

struct OracleSolution {
  double value = 0.0;
  std::vector<std::size_t> row_support;
  std::vector<std::size_t> col_support;
  MixedStrategy row_strategy;
  MixedStrategy col_strategy;
};

// Brute-force support enumeration. Visits equal-size support pairs (I, J) by
// increasing size, then lexicographically, solves the two equalization
// systems and returns the first pair whose strategies are nonnegative and
// admit no improving pure deviation beyond 1e-8.
//
// Throws InputError when either dimension exceeds kOracleMaxDim.
OracleSolution OracleSolve(const GameMatrix& a);

// Equalization test: for the row player, max_j |(s^T A)_j - v| <= tol; for
// the column player, max_i |(A s)_i - v| <= tol.
bool IsOptimalDominated(const GameMatrix& a, const MixedStrategy& s, double v,
                        double tol);

// Extremes of each column payoff (x^T A)_j over the set of row-optimal
// strategies.
struct RowOptimaAudit {
  std::vector<double> column_min;
  std::vector<double> column_max;
  bool all_dominated = false;
};

// Optimal-strategy polytope {x stochastic, (x^T A)_k >= v - slack} with
// slack = 1e-3 * tol; each column payoff is minimized and maximized over it
// (2n LPs). all_dominated holds iff every extreme is within tol of v.
RowOptimaAudit AuditRowOptima(const GameMatrix& a, double v, double tol,
                              double lp_feas_tol = kDefaultFeasTol);

bool AllRowOptimaDominated(const GameMatrix& a, double v, double tol,
                           double lp_feas_tol = kDefaultFeasTol);

}  // namespace matgame

#endif  // MATGAME_SOLVER_H_
