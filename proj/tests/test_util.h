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

#ifndef MATGAME_TESTS_TEST_UTIL_H_
#define MATGAME_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "matgame/core.h"

namespace matgame::testing {

inline GameMatrix Rps() { return GameMatrix{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}}; }

inline std::string DataPath(const std::string& name) {
  return std::string(MATGAME_TEST_DATA_DIR) + "/" + name;
}

inline std::string ReadFile(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

// Pure saddle point by exhaustive scan: an entry that is the minimum of its
// row and the maximum of its column.
inline std::optional<double> SaddleValue(const GameMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      bool row_min = true;
      bool col_max = true;
      for (std::size_t k = 0; k < a.cols(); ++k) row_min &= a(i, j) <= a(i, k);
      for (std::size_t k = 0; k < a.rows(); ++k) col_max &= a(i, j) >= a(k, j);
      if (row_min && col_max) return a(i, j);
    }
  }
  return std::nullopt;
}

// Closed form for 2x2 games: saddle value if one exists, otherwise
// (ad - bc) / (a + d - b - c).
inline double TwoByTwoValue(const GameMatrix& m) {
  if (auto s = SaddleValue(m)) return *s;
  const double a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  return (a * d - b * c) / (a + d - b - c);
}

// Dominant eigenpair of a positive 2x2 matrix from the characteristic
// polynomial. The vector is normalized to sum one.
struct TwoByTwoPerron {
  double root;
  std::vector<double> vector;
};

inline TwoByTwoPerron QuadraticPerron(const GameMatrix& m) {
  const double a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  const double tr = a + d;
  const double det = a * d - b * c;
  const double root = 0.5 * (tr + std::sqrt(tr * tr - 4.0 * det));
  // (a - root) v0 + b v1 = 0  =>  v ∝ (b, root - a)
  const double v0 = b;
  const double v1 = root - a;
  return {root, {v0 / (v0 + v1), v1 / (v0 + v1)}};
}

// Rank by Gaussian elimination with complete pivoting; pivots no larger than
// tol * ||A||_inf count as zero.
inline std::size_t FullPivotRank(const GameMatrix& a, double tol) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<double> r = a.entries();
  const double threshold = tol * a.inf_norm();
  std::vector<std::size_t> colperm(n);
  for (std::size_t j = 0; j < n; ++j) colperm[j] = j;
  std::size_t rank = 0;
  for (; rank < std::min(m, n); ++rank) {
    std::size_t bi = rank, bj = rank;
    double best = -1.0;
    for (std::size_t i = rank; i < m; ++i) {
      for (std::size_t j = rank; j < n; ++j) {
        if (std::abs(r[i * n + j]) > best) {
          best = std::abs(r[i * n + j]);
          bi = i;
          bj = j;
        }
      }
    }
    if (best <= threshold) break;
    for (std::size_t j = 0; j < n; ++j) std::swap(r[rank * n + j], r[bi * n + j]);
    for (std::size_t i = 0; i < m; ++i) std::swap(r[i * n + rank], r[i * n + bj]);
    for (std::size_t i = rank + 1; i < m; ++i) {
      const double f = r[i * n + rank] / r[rank * n + rank];
      for (std::size_t j = rank; j < n; ++j) r[i * n + j] -= f * r[rank * n + j];
    }
  }
  return rank;
}

}  // namespace matgame::testing

#endif  // MATGAME_TESTS_TEST_UTIL_H_
