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

#ifndef MATGAME_CLAIMS_H_
#define MATGAME_CLAIMS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "matgame/core.h"
#include "matgame/lp.h"

namespace matgame {

// Each checker audits one structural result about matrix games against a
// concrete input. Checkers never assume the result: they compute both sides
// and report what they see.

enum class ClaimId {
  kDiagonalTheorem1,
  kSkewZeroCor3,
  kSharedOptimaCor4,
  kNegTransposeThm2,
  kEigenspaceLemma5,
  kGordanTheorem3,
  kPositiveDominatedThm4,
  kShiftedEigenThm4General,
};

inline constexpr ClaimId kAllClaims[] = {
    ClaimId::kDiagonalTheorem1,     ClaimId::kSkewZeroCor3,
    ClaimId::kSharedOptimaCor4,     ClaimId::kNegTransposeThm2,
    ClaimId::kEigenspaceLemma5,     ClaimId::kGordanTheorem3,
    ClaimId::kPositiveDominatedThm4, ClaimId::kShiftedEigenThm4General,
};

const char* ClaimName(ClaimId id);
std::optional<ClaimId> ParseClaimId(std::string_view name);

enum class Verdict { kHolds, kViolated, kNotApplicable };

const char* VerdictName(Verdict v);

using Quantity =
    std::variant<bool, std::int64_t, double, std::string, std::vector<double>>;

struct ClaimReport {
  ClaimId claim_id = ClaimId::kDiagonalTheorem1;
  std::string input_digest;
  // Named inputs, intermediate results, expected and observed quantities.
  // Ordered by key so serialization is canonical.
  std::map<std::string, Quantity> computed;
  Verdict verdict = Verdict::kNotApplicable;
  double tolerance = 0.0;
};

inline constexpr double kDefaultClaimTol = 1e-7;
inline constexpr double kDefiniteZeroTol = 1e-12;

// Diagonal games. With all d_i of one strict sign the predicted value is
// 1 / sum(1/d_i) and both players' optimum is x_i = v / d_i. Otherwise the
// predicted value is 0 and the row optimum must put no weight on negative
// diagonal entries.
ClaimReport CheckDiagonal(std::span<const double> d,
                          double tol = kDefaultClaimTol,
                          double lp_tol = kDefaultFeasTol);

// Skew-symmetric games have value 0 and a row optimum that is also column
// optimal (and vice versa). Covers both the zero-value and shared-optima
// claims; `id` only selects the label on the report.
ClaimReport CheckSkew(const GameMatrix& a, double tol = kDefaultClaimTol,
                      double lp_tol = kDefaultFeasTol,
                      ClaimId id = ClaimId::kSkewZeroCor3);

// v(A) = -v(-A^T).
ClaimReport CheckNegTranspose(const GameMatrix& a,
                              double tol = kDefaultClaimTol,
                              double lp_tol = kDefaultFeasTol);

// For skew-symmetric A, a stochastic eigenvector that is also an optimal
// strategy must belong to eigenvalue 0. Every lambda in `lambdas`, plus 0, is
// queried.
ClaimReport CheckEigenspaceLemma5(const GameMatrix& a,
                                  std::span<const double> lambdas = {},
                                  double tol = kDefaultClaimTol,
                                  double lp_tol = kDefaultFeasTol);

// Relates the Gordan branch of a skew-symmetric A to whether an optimal
// strategy lies in its null space. The report verdict is the biconditional
// "optimum in kernel <=> A y > 0 solvable"; the polarity-reversed form is
// recorded alongside as `reversed_verdict`.
ClaimReport CheckGordanTheorem3(const GameMatrix& a,
                                double tol = kDefaultClaimTol,
                                double lp_tol = kDefaultFeasTol);

// Positive square A whose value lies in [lambda* min y*, lambda* max y*]:
// every row optimum should equalize all columns at v.
ClaimReport CheckPositiveDominated(const GameMatrix& a,
                                   double tol = kDefaultClaimTol,
                                   double lp_tol = kDefaultFeasTol);

// If A and A^T both have stochastic eigenvectors for lambda then
// v(A - lambda I) = 0 and those eigenvectors equalize A - lambda I.
ClaimReport CheckShiftedEigen(const GameMatrix& a, double lambda,
                              double tol = kDefaultClaimTol,
                              double lp_tol = kDefaultFeasTol);

struct ClaimParams {
  double tol = kDefaultClaimTol;
  double lp_tol = kDefaultFeasTol;
  // Candidate eigenvalues. The eigenspace check queries all of them; the
  // shifted-eigen check emits one report per entry (0 when empty).
  std::vector<double> lambdas;
};

// Runs one claim on a matrix. The diagonal check reads the diagonal of A and
// is NotApplicable for non-diagonal input.
std::vector<ClaimReport> RunClaim(ClaimId id, const GameMatrix& a,
                                  const ClaimParams& params = {});

}  // namespace matgame

#endif  // MATGAME_CLAIMS_H_
