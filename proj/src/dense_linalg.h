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

#ifndef MATGAME_SRC_DENSE_LINALG_H_
#define MATGAME_SRC_DENSE_LINALG_H_

#include <cstddef>
#include <optional>
#include <vector>

namespace matgame::internal {

// Solves the n x n system M z = b (M row-major) by Gaussian elimination with
// partial pivoting. Returns nullopt when a pivot falls below
// singular_tol * max|M|.
std::optional<std::vector<double>> SolveSquare(std::vector<double> m,
                                               std::vector<double> b,
                                               std::size_t n,
                                               double singular_tol = 1e-12);

}  // namespace matgame::internal

#endif  // MATGAME_SRC_DENSE_LINALG_H_
