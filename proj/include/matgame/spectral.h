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

#ifndef MATGAME_SPECTRAL_H_
#define MATGAME_SPECTRAL_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "matgame/core.h"
#include "matgame/lp.h"

namespace matgame {

// Power iteration did not settle, or settled on a vector whose eigen-residual
// is above the requested tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kPerronResidualTol = 1e-10;
inline constexpr double kPerronStepTol = 1e-14;
inline constexpr int kPerronMaxIterations = 100000;
inline constexpr double kDefaultRankTol = 1e-9;

struct SpectralCert {
  double perron_root = 0.0;
  // Strictly positive, sums to one.
  std::vector<double> perron_vector;
  // ||A v - lambda v||_inf
  double residual = 0.0;
  int iterations = 0;
};

// Perron root and vector of a strictly positive square matrix.
//
// Starts from the uniform vector and repeats v <- A v / ||A v||_1 until two
// successive iterates differ by less than 1e-14 in the max norm. The root is
// the component-sum ratio sum(A v) / sum(v). Throws InputError for
// non-square or non-positive input and ConvergenceError when the iteration
// cap is hit or the residual exceeds `tol`.
SpectralCert Perron(const GameMatrix& a, double tol = kPerronResidualTol);

struct KernelBasis {
  std::size_t dimension = 0;
  // Each vector is scaled to unit max norm.
  std::vector<std::vector<double>> basis_vectors;
};

// Null space of A by reduction to row echelon form with partial pivoting.
// Pivots no larger than rank_tol * ||A||_inf count as zero.
KernelBasis NullSpace(const GameMatrix& a, double rank_tol = kDefaultRankTol);

// A stochastic y with (A - lambda I) y = 0, found as an LP feasibility
// problem, or nullopt if none exists. Pass A^T (and Player::kRow) for a left
// eigenvector.
std::optional<MixedStrategy> StochasticEigenvector(
    const GameMatrix& a, double lambda, Player player = Player::kCol,
    double feas_tol = kDefaultFeasTol);

enum class GordanBranch { kNonnegativeKernel, kPositiveImage };

const char* GordanBranchName(GordanBranch b);

struct GordanVerdict {
  GordanBranch branch = GordanBranch::kNonnegativeKernel;
  // kNonnegativeKernel: stochastic x with A x = 0.
  // kPositiveImage: y with A^T y >= 1.
  std::vector<double> witness;
};

// Decides Gordan's alternative for any m x n matrix with two feasibility LPs:
//   (1) A x = 0, x >= 0, sum x = 1
//   (2) A^T y >= 1, y free   (the strict system A^T y > 0, rescaled)
// Throws InternalInconsistency when both or neither are feasible.
GordanVerdict Gordan(const GameMatrix& a, double feas_tol = kDefaultFeasTol);

}  // namespace matgame

#endif  // MATGAME_SPECTRAL_H_
