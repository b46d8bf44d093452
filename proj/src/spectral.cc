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

#include "matgame/spectral.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

namespace matgame {
namespace {

std::vector<double> Normalized(std::vector<double> v) {
  const double s = std::accumulate(v.begin(), v.end(), 0.0);
  for (double& e : v) e /= s;
  return v;
}

double Sum(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0);
}

}  // namespace

SpectralCert Perron(const GameMatrix& a, double tol) {
  if (!a.is_square()) throw InputError("perron: matrix must be square");
  if (a.min_entry() <= 0.0) {
    throw InputError("perron: matrix must be strictly positive");
  }
  const std::size_t n = a.rows();
  std::vector<double> v(n, 1.0 / static_cast<double>(n));
  int it = 0;
  while (true) {
    if (it >= kPerronMaxIterations) {
      throw ConvergenceError("perron: power iteration did not converge in " +
                             std::to_string(kPerronMaxIterations) +
                             " iterations");
    }
    std::vector<double> next = Normalized(a.right_multiply(v));
    ++it;
    const double step = InfDistance(next, v);
    v = std::move(next);
    if (step < kPerronStepTol) break;
  }

  const std::vector<double> av = a.right_multiply(v);
  const double root = Sum(av) / Sum(v);
  double residual = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    residual = std::max(residual, std::abs(av[i] - root * v[i]));
  }
  if (residual > tol) {
    throw ConvergenceError("perron: residual " + std::to_string(residual) +
                           " above tolerance");
  }
  return SpectralCert{.perron_root = root,
                      .perron_vector = std::move(v),
                      .residual = residual,
                      .iterations = it};
}

KernelBasis NullSpace(const GameMatrix& a, double rank_tol) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<double> r = a.entries();
  auto at = [&](std::size_t i, std::size_t j) -> double& { return r[i * n + j]; };
  const double threshold = rank_tol * a.inf_norm();

  std::vector<std::size_t> pivot_cols;
  std::vector<bool> is_pivot(n, false);
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < m; ++c) {
    std::size_t best = row;
    for (std::size_t i = row + 1; i < m; ++i) {
      if (std::abs(at(i, c)) > std::abs(at(best, c))) best = i;
    }
    if (std::abs(at(best, c)) <= threshold) continue;
    if (best != row) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(row, j), at(best, j));
    }
    const double p = at(row, c);
    for (std::size_t j = 0; j < n; ++j) at(row, j) /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row) continue;
      const double f = at(i, c);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) at(i, j) -= f * at(row, j);
    }
    pivot_cols.push_back(c);
    is_pivot[c] = true;
    ++row;
  }

  KernelBasis out;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<double> b(n, 0.0);
    b[f] = 1.0;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
      b[pivot_cols[k]] = -at(k, f);
    }
    const double scale = InfNorm(b);
    for (double& e : b) e /= scale;
    out.basis_vectors.push_back(std::move(b));
  }
  out.dimension = out.basis_vectors.size();
  return out;
}

std::optional<MixedStrategy> StochasticEigenvector(const GameMatrix& a,
                                                   double lambda, Player player,
                                                   double feas_tol) {
  if (!a.is_square()) {
    throw InputError("stochastic_eigenvector: matrix must be square");
  }
  if (!std::isfinite(lambda)) {
    throw InputError("stochastic_eigenvector: lambda must be finite");
  }
  const std::size_t n = a.rows();
  const GameMatrix shifted = a.minus_identity(lambda);
  LinearProgram lp;
  lp.objective.assign(n, 0.0);
  lp.eq_lhs = shifted.to_rows();
  lp.eq_rhs.assign(n, 0.0);
  lp.eq_lhs.push_back(std::vector<double>(n, 1.0));
  lp.eq_rhs.push_back(1.0);
  const LPSolution s = SolveLP(lp, feas_tol);
  if (s.status == LPStatus::kInfeasible) return std::nullopt;
  if (s.status != LPStatus::kOptimal) {
    throw InternalInconsistency("stochastic_eigenvector: feasibility LP is " +
                                std::string(LPStatusName(s.status)));
  }
  return ValidateStrategy(s.point, player);
}

const char* GordanBranchName(GordanBranch b) {
  return b == GordanBranch::kNonnegativeKernel ? "NonnegativeKernel"
                                               : "PositiveImage";
}

GordanVerdict Gordan(const GameMatrix& a, double feas_tol) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();

  LinearProgram kernel;
  kernel.objective.assign(n, 0.0);
  kernel.eq_lhs = a.to_rows();
  kernel.eq_rhs.assign(m, 0.0);
  kernel.eq_lhs.push_back(std::vector<double>(n, 1.0));
  kernel.eq_rhs.push_back(1.0);
  const LPSolution first = SolveLP(kernel, feas_tol);

  // -A^T y <= -1 with y free.
  LinearProgram image;
  image.objective.assign(m, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> row(m);
    for (std::size_t i = 0; i < m; ++i) row[i] = -a(i, j);
    image.ineq_lhs.push_back(std::move(row));
    image.ineq_rhs.push_back(-1.0);
  }
  image.lower_bounds.assign(m, -kInf);
  const LPSolution second = SolveLP(image, feas_tol);

  const bool kernel_feasible = first.status == LPStatus::kOptimal;
  const bool image_feasible = second.status == LPStatus::kOptimal;
  if (kernel_feasible == image_feasible) {
    throw InternalInconsistency(
        std::string("gordan: alternatives are ") +
        (kernel_feasible ? "both feasible" : "both infeasible"));
  }
  if (kernel_feasible) {
    return GordanVerdict{.branch = GordanBranch::kNonnegativeKernel,
                         .witness = ValidateStrategy(first.point).weights()};
  }
  return GordanVerdict{.branch = GordanBranch::kPositiveImage,
                       .witness = second.point};
}

}  // namespace matgame
