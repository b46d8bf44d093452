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

#include "matgame/claims.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "matgame/matrix_io.h"
#include "matgame/solver.h"
#include "matgame/spectral.h"

namespace matgame {
namespace {

ClaimReport NewReport(ClaimId id, const GameMatrix& a, double tol) {
  ClaimReport r;
  r.claim_id = id;
  r.input_digest = CanonicalText(a);
  r.tolerance = tol;
  return r;
}

ClaimReport NotApplicable(ClaimReport r, std::string hypothesis) {
  r.verdict = Verdict::kNotApplicable;
  r.computed["failed_hypothesis"] = std::move(hypothesis);
  return r;
}

double SkewResidual(const GameMatrix& a) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      worst = std::max(worst, std::abs(a(i, j) + a(j, i)));
    }
  }
  return worst;
}

// Records the skew-symmetry hypothesis; returns false when it fails.
bool RequireSkew(const GameMatrix& a, ClaimReport& r) {
  r.computed["square"] = a.is_square();
  if (!a.is_square()) return false;
  const double residual = SkewResidual(a);
  r.computed["skew_residual"] = residual;
  return residual <= r.tolerance;
}

// Optimal at value 0 for a skew game: x^T A >= 0 (equivalently A x <= 0).
bool OptimalAtZero(const GameMatrix& a, const MixedStrategy& w, double tol) {
  return RowGuarantee(a, w.weights()) >= -tol && ColCeiling(a, w.weights()) <= tol;
}

Verdict FromBool(bool holds) {
  return holds ? Verdict::kHolds : Verdict::kViolated;
}

bool IsDiagonal(const GameMatrix& a) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j && a(i, j) != 0.0) return false;
    }
  }
  return true;
}

}  // namespace

const char* ClaimName(ClaimId id) {
  switch (id) {
    case ClaimId::kDiagonalTheorem1:
      return "DiagonalTheorem1";
    case ClaimId::kSkewZeroCor3:
      return "SkewZeroCor3";
    case ClaimId::kSharedOptimaCor4:
      return "SharedOptimaCor4";
    case ClaimId::kNegTransposeThm2:
      return "NegTransposeThm2";
    case ClaimId::kEigenspaceLemma5:
      return "EigenspaceLemma5";
    case ClaimId::kGordanTheorem3:
      return "GordanTheorem3";
    case ClaimId::kPositiveDominatedThm4:
      return "PositiveDominatedThm4";
    case ClaimId::kShiftedEigenThm4General:
      return "ShiftedEigenThm4General";
  }
  return "?";
}

std::optional<ClaimId> ParseClaimId(std::string_view name) {
  for (ClaimId id : kAllClaims) {
    if (name == ClaimName(id)) return id;
  }
  return std::nullopt;
}

const char* VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kHolds:
      return "Holds";
    case Verdict::kViolated:
      return "Violated";
    case Verdict::kNotApplicable:
      return "NotApplicable";
  }
  return "?";
}

ClaimReport CheckDiagonal(std::span<const double> d, double tol, double lp_tol) {
  if (d.empty()) throw InputError("check_diagonal: empty diagonal");
  const GameMatrix a = GameMatrix::Diagonal(d);
  ClaimReport r = NewReport(ClaimId::kDiagonalTheorem1, a, tol);
  const std::vector<double> diag(d.begin(), d.end());
  r.computed["diagonal"] = diag;

  const bool positive = std::all_of(diag.begin(), diag.end(),
                                    [](double v) { return v > kDefiniteZeroTol; });
  const bool negative = std::all_of(diag.begin(), diag.end(),
                                    [](double v) { return v < -kDefiniteZeroTol; });
  const GameSolution sol = SolveGame(a, tol, lp_tol);
  r.computed["observed_value"] = sol.value;
  r.computed["row_strategy"] = sol.row_strategy.weights();
  r.computed["col_strategy"] = sol.col_strategy.weights();

  if (positive || negative) {
    r.computed["definiteness"] = std::string(positive ? "positive" : "negative");
    double inv_sum = 0.0;
    for (double v : diag) inv_sum += 1.0 / v;
    const double predicted = 1.0 / inv_sum;
    std::vector<double> predicted_x(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) predicted_x[i] = predicted / diag[i];
    const double row_err = InfDistance(sol.row_strategy.weights(), predicted_x);
    const double col_err = InfDistance(sol.col_strategy.weights(), predicted_x);
    r.computed["expected_value"] = predicted;
    r.computed["expected_strategy"] = predicted_x;
    r.computed["row_strategy_error"] = row_err;
    r.computed["col_strategy_error"] = col_err;
    r.verdict = FromBool(std::abs(sol.value - predicted) <= tol &&
                         row_err <= tol && col_err <= tol);
    return r;
  }

  r.computed["definiteness"] = std::string("indefinite");
  double row_neg = 0.0;
  double col_neg = 0.0;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] < -kDefiniteZeroTol) {
      row_neg += sol.row_strategy[i];
      col_neg += sol.col_strategy[i];
    }
  }
  r.computed["expected_value"] = 0.0;
  r.computed["expected_row_weight_on_negative"] = 0.0;
  r.computed["observed_row_weight_on_negative"] = row_neg;
  // Informational only: the column optimum is not constrained this way.
  r.computed["observed_col_weight_on_negative"] = col_neg;
  r.verdict = FromBool(std::abs(sol.value) <= tol && row_neg <= tol);
  return r;
}

ClaimReport CheckSkew(const GameMatrix& a, double tol, double lp_tol,
                      ClaimId id) {
  ClaimReport r = NewReport(id, a, tol);
  if (!RequireSkew(a, r)) return NotApplicable(std::move(r), "skew-symmetric");

  const GameSolution sol = SolveGame(a, tol, lp_tol);
  // x* played by the column player and y* played by the row player.
  const double row_as_col = ColCeiling(a, sol.row_strategy.weights());
  const double col_as_row = RowGuarantee(a, sol.col_strategy.weights());
  r.computed["expected_value"] = 0.0;
  r.computed["observed_value"] = sol.value;
  r.computed["row_strategy"] = sol.row_strategy.weights();
  r.computed["col_strategy"] = sol.col_strategy.weights();
  r.computed["row_strategy_as_col_ceiling"] = row_as_col;
  r.computed["col_strategy_as_row_floor"] = col_as_row;
  r.verdict = FromBool(std::abs(sol.value) <= tol && row_as_col <= tol &&
                       col_as_row >= -tol);
  return r;
}

ClaimReport CheckNegTranspose(const GameMatrix& a, double tol, double lp_tol) {
  ClaimReport r = NewReport(ClaimId::kNegTransposeThm2, a, tol);
  const double v = SolveGame(a, tol, lp_tol).value;
  const double w = SolveGame(a.transposed().negated(), tol, lp_tol).value;
  r.computed["value"] = v;
  r.computed["neg_transpose_value"] = w;
  r.computed["expected_value"] = -w;
  r.computed["observed_value"] = v;
  r.computed["discrepancy"] = std::abs(v + w);
  r.verdict = FromBool(std::abs(v + w) <= tol);
  return r;
}

ClaimReport CheckEigenspaceLemma5(const GameMatrix& a,
                                  std::span<const double> lambdas, double tol,
                                  double lp_tol) {
  ClaimReport r = NewReport(ClaimId::kEigenspaceLemma5, a, tol);
  if (!RequireSkew(a, r)) return NotApplicable(std::move(r), "skew-symmetric");

  std::vector<double> candidates(lambdas.begin(), lambdas.end());
  candidates.push_back(0.0);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  std::vector<double> found;
  std::vector<double> optimal;
  std::vector<double> offending;
  for (double lambda : candidates) {
    const auto w = StochasticEigenvector(a, lambda, Player::kCol, lp_tol);
    const bool is_optimal = w && OptimalAtZero(a, *w, tol);
    found.push_back(w ? 1.0 : 0.0);
    optimal.push_back(is_optimal ? 1.0 : 0.0);
    if (is_optimal && std::abs(lambda) > tol) offending.push_back(lambda);
    if (lambda == 0.0) {
      r.computed["zero_eigen_witness_found"] = w.has_value();
      r.computed["zero_eigen_witness_optimal"] = is_optimal;
      if (w) r.computed["zero_eigen_witness"] = w->weights();
    }
  }
  r.computed["lambdas"] = candidates;
  r.computed["stochastic_eigenvector_found"] = found;
  r.computed["witness_is_optimal"] = optimal;
  r.computed["kernel_dimension"] =
      static_cast<std::int64_t>(NullSpace(a).dimension);
  r.computed["offending_lambdas"] = offending;
  r.computed["expected_offending_count"] = std::int64_t{0};
  r.computed["observed_offending_count"] =
      static_cast<std::int64_t>(offending.size());
  r.verdict = FromBool(offending.empty());
  return r;
}

ClaimReport CheckGordanTheorem3(const GameMatrix& a, double tol, double lp_tol) {
  ClaimReport r = NewReport(ClaimId::kGordanTheorem3, a, tol);
  if (!RequireSkew(a, r)) return NotApplicable(std::move(r), "skew-symmetric");

  const GordanVerdict g = Gordan(a, lp_tol);
  const auto w = StochasticEigenvector(a, 0.0, Player::kCol, lp_tol);
  const bool exists = w && OptimalAtZero(a, *w, tol);
  const bool image = g.branch == GordanBranch::kPositiveImage;

  const Verdict as_stated = FromBool(exists == image);
  const Verdict reversed = FromBool(exists == !image);
  r.computed["gordan_branch"] = std::string(GordanBranchName(g.branch));
  r.computed["gordan_witness"] = g.witness;
  r.computed["positive_image_solvable"] = image;
  r.computed["expected_exists"] = image;
  r.computed["observed_exists"] = exists;
  if (w) r.computed["kernel_strategy"] = w->weights();
  r.computed["as_stated_verdict"] = std::string(VerdictName(as_stated));
  r.computed["reversed_verdict"] = std::string(VerdictName(reversed));
  r.verdict = as_stated;
  return r;
}

ClaimReport CheckPositiveDominated(const GameMatrix& a, double tol,
                                   double lp_tol) {
  ClaimReport r = NewReport(ClaimId::kPositiveDominatedThm4, a, tol);
  r.computed["square"] = a.is_square();
  r.computed["min_entry"] = a.min_entry();
  if (!a.is_square() || a.min_entry() <= 0.0) {
    return NotApplicable(std::move(r), "square and strictly positive");
  }

  const SpectralCert cert = Perron(a);
  const GameSolution sol = SolveGame(a, tol, lp_tol);
  const auto [lo_it, hi_it] = std::minmax_element(cert.perron_vector.begin(),
                                                  cert.perron_vector.end());
  const double low = cert.perron_root * *lo_it;
  const double high = cert.perron_root * *hi_it;
  r.computed["perron_root"] = cert.perron_root;
  r.computed["perron_vector"] = cert.perron_vector;
  r.computed["value"] = sol.value;
  r.computed["bracket_low"] = low;
  r.computed["bracket_high"] = high;
  r.computed["row_strategy"] = sol.row_strategy.weights();
  if (sol.value < low - tol || sol.value > high + tol) {
    return NotApplicable(std::move(r), "value within perron bracket");
  }

  const RowOptimaAudit audit = AuditRowOptima(a, sol.value, tol, lp_tol);
  double deviation = 0.0;
  for (double e : audit.column_min) deviation = std::max(deviation, std::abs(e - sol.value));
  for (double e : audit.column_max) deviation = std::max(deviation, std::abs(e - sol.value));
  r.computed["column_min"] = audit.column_min;
  r.computed["column_max"] = audit.column_max;
  r.computed["expected_column_value"] = sol.value;
  r.computed["observed_max_deviation"] = deviation;
  r.verdict = FromBool(audit.all_dominated);
  return r;
}

ClaimReport CheckShiftedEigen(const GameMatrix& a, double lambda, double tol,
                              double lp_tol) {
  ClaimReport r = NewReport(ClaimId::kShiftedEigenThm4General, a, tol);
  r.computed["lambda"] = lambda;
  r.computed["square"] = a.is_square();
  if (!a.is_square()) return NotApplicable(std::move(r), "square");

  const auto right = StochasticEigenvector(a, lambda, Player::kCol, lp_tol);
  const auto left =
      StochasticEigenvector(a.transposed(), lambda, Player::kRow, lp_tol);
  r.computed["right_eigenvector_found"] = right.has_value();
  r.computed["left_eigenvector_found"] = left.has_value();
  if (!right || !left) {
    return NotApplicable(std::move(r), "stochastic eigenvectors of A and A^T");
  }

  const GameMatrix shifted = a.minus_identity(lambda);
  const GameSolution sol = SolveGame(shifted, tol, lp_tol);
  const bool row_dominated = IsOptimalDominated(shifted, *left, 0.0, tol);
  const bool col_dominated = IsOptimalDominated(shifted, *right, 0.0, tol);
  r.computed["left_eigenvector"] = left->weights();
  r.computed["right_eigenvector"] = right->weights();
  r.computed["expected_value"] = 0.0;
  r.computed["observed_value"] = sol.value;
  r.computed["left_eigenvector_residual"] = InfNorm(shifted.left_multiply(left->weights()));
  r.computed["right_eigenvector_residual"] = InfNorm(shifted.right_multiply(right->weights()));
  r.computed["left_eigenvector_dominated"] = row_dominated;
  r.computed["right_eigenvector_dominated"] = col_dominated;
  r.verdict = FromBool(std::abs(sol.value) <= tol && row_dominated && col_dominated);
  return r;
}

std::vector<ClaimReport> RunClaim(ClaimId id, const GameMatrix& a,
                                  const ClaimParams& params) {
  const double tol = params.tol;
  const double lp = params.lp_tol;
  switch (id) {
    case ClaimId::kDiagonalTheorem1: {
      if (!IsDiagonal(a)) {
        ClaimReport r = NewReport(id, a, tol);
        r.computed["square"] = a.is_square();
        return {NotApplicable(std::move(r), "diagonal")};
      }
      std::vector<double> d(a.rows());
      for (std::size_t i = 0; i < a.rows(); ++i) d[i] = a(i, i);
      return {CheckDiagonal(d, tol, lp)};
    }
    case ClaimId::kSkewZeroCor3:
    case ClaimId::kSharedOptimaCor4:
      return {CheckSkew(a, tol, lp, id)};
    case ClaimId::kNegTransposeThm2:
      return {CheckNegTranspose(a, tol, lp)};
    case ClaimId::kEigenspaceLemma5:
      return {CheckEigenspaceLemma5(a, params.lambdas, tol, lp)};
    case ClaimId::kGordanTheorem3:
      return {CheckGordanTheorem3(a, tol, lp)};
    case ClaimId::kPositiveDominatedThm4:
      return {CheckPositiveDominated(a, tol, lp)};
    case ClaimId::kShiftedEigenThm4General: {
      std::vector<ClaimReport> out;
      if (params.lambdas.empty()) {
        out.push_back(CheckShiftedEigen(a, 0.0, tol, lp));
      }
      for (double lambda : params.lambdas) {
        out.push_back(CheckShiftedEigen(a, lambda, tol, lp));
      }
      return out;
    }
  }
  return {};
}

}  // namespace matgame
