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

#include "matgame/ensemble.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace matgame {

std::uint64_t Rng::Index(std::uint64_t n) {
  if (n == 0) throw InputError("Rng::Index: empty range");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % n + 1) % n;
  while (true) {
    const std::uint64_t r = engine_();
    if (r <= limit) return r % n;
  }
}

const char* FamilyName(Family f) {
  switch (f) {
    case Family::kDiagonal:
      return "Diagonal";
    case Family::kSkew:
      return "Skew";
    case Family::kPositive:
      return "Positive";
    case Family::kGeneral:
      return "General";
  }
  return "?";
}

std::optional<Family> ParseFamily(std::string_view name) {
  for (Family f : {Family::kDiagonal, Family::kSkew, Family::kPositive,
                   Family::kGeneral}) {
    if (name == FamilyName(f)) return f;
  }
  return std::nullopt;
}

void ValidateEnsembleSpec(const EnsembleSpec& spec) {
  if (!std::isfinite(spec.lo) || !std::isfinite(spec.hi) || !(spec.lo < spec.hi)) {
    throw InputError("ensemble entry range must satisfy lo < hi");
  }
  if (spec.family == Family::kPositive && spec.hi <= kPositiveFloor) {
    throw InputError("Positive ensemble needs hi > 1e-3");
  }
  if (spec.size == 0 || (spec.rows && *spec.rows == 0)) {
    throw InputError("ensemble matrix size must be positive");
  }
  if (spec.rows && *spec.rows != spec.size && spec.family != Family::kGeneral) {
    throw InputError(std::string(FamilyName(spec.family)) +
                     " ensembles are square");
  }
}

GameMatrix RandomMatrix(Family family, std::size_t rows, std::size_t cols,
                        double lo, double hi, Rng& rng) {
  if (family != Family::kGeneral && rows != cols) {
    throw InputError("only General matrices may be non-square");
  }
  std::vector<double> e(rows * cols, 0.0);
  switch (family) {
    case Family::kDiagonal:
      for (std::size_t i = 0; i < rows; ++i) e[i * cols + i] = rng.Uniform(lo, hi);
      break;
    case Family::kSkew:
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = i + 1; j < cols; ++j) {
          const double v = rng.Uniform(lo, hi);
          e[i * cols + j] = v;
          e[j * cols + i] = -v;
        }
      }
      break;
    case Family::kPositive: {
      const double floor = std::max(lo, kPositiveFloor);
      for (double& v : e) v = rng.Uniform(floor, hi);
      break;
    }
    case Family::kGeneral:
      for (double& v : e) v = rng.Uniform(lo, hi);
      break;
  }
  return GameMatrix(rows, cols, std::move(e));
}

std::vector<GameMatrix> GenerateEnsemble(const EnsembleSpec& spec) {
  ValidateEnsembleSpec(spec);
  Rng rng(spec.seed);
  const std::size_t rows = spec.rows.value_or(spec.size);
  std::vector<GameMatrix> out;
  out.reserve(spec.trials);
  for (std::size_t t = 0; t < spec.trials; ++t) {
    out.push_back(RandomMatrix(spec.family, rows, spec.size, spec.lo, spec.hi, rng));
  }
  return out;
}

}  // namespace matgame
