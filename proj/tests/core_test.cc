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

#include "matgame/core.h"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "matgame/ensemble.h"
#include "test_util.h"

namespace matgame {
namespace {

using ::matgame::testing::Rps;

TEST(GameMatrixTest, RejectsBadShapes) {
  EXPECT_THROW(GameMatrix(0, 2, {}), InputError);
  EXPECT_THROW(GameMatrix(2, 2, {1, 2, 3}), InputError);
  EXPECT_THROW(GameMatrix(1, 1, {NAN}), InputError);
  EXPECT_THROW(GameMatrix(1, 1, {INFINITY}), InputError);
  EXPECT_THROW(GameMatrix::FromRows({{1, 2}, {3}}), InputError);
  EXPECT_THROW(GameMatrix(2, 2, {1, 2, 3, 4}).at(2, 0), InputError);
}

TEST(GameMatrixTest, BasicTransforms) {
  const GameMatrix a{{1, 2, 3}, {4, 5, 6}};
  EXPECT_EQ(a.transposed(), (GameMatrix{{1, 4}, {2, 5}, {3, 6}}));
  EXPECT_EQ(a.negated().transposed(), (GameMatrix{{-1, -4}, {-2, -5}, {-3, -6}}));
  EXPECT_EQ(a.shifted(1.0), (GameMatrix{{2, 3, 4}, {5, 6, 7}}));
  EXPECT_DOUBLE_EQ(a.inf_norm(), 15.0);
  EXPECT_THROW(a.minus_identity(1.0), InputError);
  EXPECT_EQ((GameMatrix{{1, 2}, {3, 4}}).minus_identity(1.0),
            (GameMatrix{{0, 2}, {3, 3}}));
}

TEST(PayoffTest, RockPaperScissorsUniformIsZero) {
  const auto u_row = MixedStrategy::Uniform(Player::kRow, 3);
  const auto u_col = MixedStrategy::Uniform(Player::kCol, 3);
  EXPECT_NEAR(Payoff(Rps(), u_row, u_col), 0.0, 1e-15);
}

TEST(PayoffTest, PureStrategiesSelectEntry) {
  const GameMatrix a{{1, 2}, {3, 4}};
  EXPECT_EQ(Payoff(a, MixedStrategy::Pure(Player::kRow, 2, 1),
                   MixedStrategy::Pure(Player::kCol, 2, 0)),
            3.0);
}

TEST(PayoffTest, DimensionMismatch) {
  const GameMatrix a{{1, 2}, {3, 4}};
  EXPECT_THROW(Payoff(a, MixedStrategy::Uniform(Player::kRow, 3),
                      MixedStrategy::Uniform(Player::kCol, 2)),
               InputError);
}

TEST(ValidateStrategyTest, Examples) {
  const std::vector<double> ok{0.5, 0.5};
  EXPECT_EQ(ValidateStrategy(ok).weights(), ok);
  EXPECT_THROW(ValidateStrategy(std::vector<double>{0.7, 0.4}), InputError);
  EXPECT_THROW(ValidateStrategy(std::vector<double>{-0.1, 1.1}), InputError);
  EXPECT_THROW(ValidateStrategy(std::vector<double>{}), InputError);
}

TEST(ValidateStrategyTest, ClampsAndRenormalizesNoise) {
  const auto s = ValidateStrategy(std::vector<double>{-5e-13, 1.0 + 4e-10});
  EXPECT_EQ(s[0], 0.0);
  EXPECT_DOUBLE_EQ(s[1], 1.0);
  EXPECT_THROW(ValidateStrategy(std::vector<double>{-2e-12, 1.0}), InputError);
  EXPECT_THROW(ValidateStrategy(std::vector<double>{0.5, 0.5 + 2e-9}), InputError);
}

std::vector<double> RandomSimplex(std::size_t n, Rng& rng) {
  std::vector<double> w(n);
  double s = 0.0;
  for (double& v : w) s += (v = rng.Uniform(0.01, 1.0));
  for (double& v : w) v /= s;
  return w;
}

TEST(PayoffPropertyTest, BilinearInRowStrategy) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + rng.Index(6), n = 1 + rng.Index(6);
    const GameMatrix a = RandomMatrix(Family::kGeneral, m, n, -5, 5, rng);
    const auto x1 = RandomSimplex(m, rng), x2 = RandomSimplex(m, rng);
    const auto y = ValidateStrategy(RandomSimplex(n, rng), Player::kCol);
    const double alpha = rng.Uniform01();
    std::vector<double> mix(m);
    for (std::size_t i = 0; i < m; ++i) mix[i] = alpha * x1[i] + (1 - alpha) * x2[i];
    const double lhs = Payoff(a, ValidateStrategy(mix), y);
    const double rhs = alpha * Payoff(a, ValidateStrategy(x1), y) +
                       (1 - alpha) * Payoff(a, ValidateStrategy(x2), y);
    EXPECT_NEAR(lhs, rhs, 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST(PayoffPropertyTest, ConstantShiftAddsConstant) {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + rng.Index(6), n = 1 + rng.Index(6);
    const GameMatrix a = RandomMatrix(Family::kGeneral, m, n, -5, 5, rng);
    const auto x = ValidateStrategy(RandomSimplex(m, rng));
    const auto y = ValidateStrategy(RandomSimplex(n, rng), Player::kCol);
    const double c = rng.Uniform(-10, 10);
    EXPECT_NEAR(Payoff(a.shifted(c), x, y), Payoff(a, x, y) + c, 1e-10);
  }
}

TEST(PayoffPropertyTest, PurePairIsExactEntry) {
  Rng rng(13);
  const GameMatrix a = RandomMatrix(Family::kGeneral, 4, 5, -5, 5, rng);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      EXPECT_EQ(Payoff(a, MixedStrategy::Pure(Player::kRow, 4, i),
                       MixedStrategy::Pure(Player::kCol, 5, j)),
                a(i, j));
    }
  }
}

}  // namespace
}  // namespace matgame
