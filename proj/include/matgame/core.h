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

#ifndef MATGAME_CORE_H_
#define MATGAME_CORE_H_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace matgame {

// Malformed caller input: wrong dimensions, non-finite entries, bad
// strategies, unparseable files.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two computations that must agree did not (for example both Gordan
// alternatives reported feasible). Indicates a tolerance or solver bug.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Dense real m x n payoff table for the row player, stored row-major.
class GameMatrix {
 public:
  GameMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
  GameMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static GameMatrix Zero(std::size_t rows, std::size_t cols);
  static GameMatrix Identity(std::size_t n);
  static GameMatrix Diagonal(std::span<const double> d);
  static GameMatrix FromRows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  double operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  double at(std::size_t i, std::size_t j) const;
  const std::vector<double>& entries() const { return entries_; }
  std::vector<std::vector<double>> to_rows() const;

  double min_entry() const;
  double max_entry() const;
  // Maximum absolute row sum.
  double inf_norm() const;

  GameMatrix transposed() const;
  GameMatrix negated() const;
  GameMatrix scaled(double c) const;
  // A + c*J.
  GameMatrix shifted(double c) const;
  // A - lambda*I; square matrices only.
  GameMatrix minus_identity(double lambda) const;

  // x^T A, an n-vector.
  std::vector<double> left_multiply(std::span<const double> x) const;
  // A y, an m-vector.
  std::vector<double> right_multiply(std::span<const double> y) const;

  friend bool operator==(const GameMatrix&, const GameMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> entries_;
};

enum class Player { kRow, kCol };

const char* PlayerName(Player p);

// A probability vector over one player's pure strategies. Construct through
// ValidateStrategy; the constructor is private so every instance is
// nonnegative and sums to one.
class MixedStrategy {
 public:
  Player player() const { return player_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }

  static MixedStrategy Pure(Player player, std::size_t size, std::size_t index);
  static MixedStrategy Uniform(Player player, std::size_t size);

  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;

 private:
  friend MixedStrategy ValidateStrategy(std::span<const double>, Player);
  MixedStrategy(Player player, std::vector<double> weights)
      : player_(player), weights_(std::move(weights)) {}

  Player player_;
  std::vector<double> weights_;
};

inline constexpr double kNegativeClampTol = 1e-12;
inline constexpr double kSumTol = 1e-9;

// Accepts weights whose entries are >= -1e-12 (clamped to zero) and whose sum
// is within 1e-9 of one (renormalized). Throws InputError otherwise.
MixedStrategy ValidateStrategy(std::span<const double> weights,
                               Player player = Player::kRow);

// Row player's expected utility x^T A y.
double Payoff(const GameMatrix& a, const MixedStrategy& x,
              const MixedStrategy& y);

// Value, optimal strategy pair and how far they are from certifying each
// other.
struct GameSolution {
  double value = 0.0;
  MixedStrategy row_strategy;
  MixedStrategy col_strategy;
  // max_i (A y)_i - min_j (x^T A)_j.
  double duality_gap = 0.0;
  double tolerance = 0.0;
};

// Smallest payoff the row strategy guarantees: min_j (x^T A)_j.
double RowGuarantee(const GameMatrix& a, std::span<const double> x);
// Largest loss the column strategy concedes: max_i (A y)_i.
double ColCeiling(const GameMatrix& a, std::span<const double> y);

double InfNorm(std::span<const double> v);
double InfDistance(std::span<const double> a, std::span<const double> b);

}  // namespace matgame

#endif  // MATGAME_CORE_H_
