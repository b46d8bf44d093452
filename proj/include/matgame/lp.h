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

#ifndef MATGAME_LP_H_
#define MATGAME_LP_H_

#include <limits>
#include <stdexcept>
#include <vector>

namespace matgame {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kDefaultFeasTol = 1e-9;
inline constexpr double kPivotTol = 1e-11;

// Thrown when the simplex exceeds 50 * (columns + rows) pivots. With Bland's
// rule this only happens if the solver itself is broken.
class IterationLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// maximize c^T z
//   s.t.  G z <= h
//         E z  = f
//         lower <= z <= upper
//
// Matrices are dense, one std::vector per constraint row. Empty `lower` means
// every variable is >= 0; empty `upper` means no upper bounds. Use -kInf and
// kInf for free directions.
struct LinearProgram {
  std::vector<double> objective;
  std::vector<std::vector<double>> ineq_lhs;
  std::vector<double> ineq_rhs;
  std::vector<std::vector<double>> eq_lhs;
  std::vector<double> eq_rhs;
  std::vector<double> lower_bounds;
  std::vector<double> upper_bounds;

  std::size_t num_variables() const { return objective.size(); }
};

enum class LPStatus { kOptimal, kInfeasible, kUnbounded };

const char* LPStatusName(LPStatus s);

struct LPSolution {
  LPStatus status = LPStatus::kInfeasible;
  std::vector<double> point;
  double objective_value = 0.0;
  // Largest violation of any constraint or bound at `point` (0 unless
  // Optimal).
  double primal_residual = 0.0;
  int iterations = 0;
};

// Two-phase primal simplex on a dense tableau with Bland's anti-cycling rule.
// Phase 1 minimizes the sum of artificial variables; the program is declared
// infeasible when that minimum exceeds `feas_tol`. Throws InputError on
// inconsistent dimensions and IterationLimitError if the pivot budget runs out.
LPSolution SolveLP(const LinearProgram& program,
                   double feas_tol = kDefaultFeasTol);

// Largest violation of constraints and bounds at z.
double PrimalResidual(const LinearProgram& program,
                      const std::vector<double>& z);

}  // namespace matgame

#endif  // MATGAME_LP_H_
