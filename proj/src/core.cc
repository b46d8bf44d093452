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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace matgame {

GameMatrix::GameMatrix(std::size_t rows, std::size_t cols,
                       std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) {
    throw InputError("game matrix must have at least one row and column");
  }
  if (entries_.size() != rows_ * cols_) {
    throw InputError("game matrix has " + std::to_string(entries_.size()) +
                     " entries, expected " + std::to_string(rows_ * cols_));
  }
  for (double e : entries_) {
    if (!std::isfinite(e)) throw InputError("game matrix entry is not finite");
  }
}

GameMatrix::GameMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : GameMatrix(FromRows({rows.begin(), rows.end()})) {}

GameMatrix GameMatrix::FromRows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw InputError("game matrix must have at least one row and column");
  }
  const std::size_t cols = rows.front().size();
  std::vector<double> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw InputError("ragged rows in game matrix");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return GameMatrix(rows.size(), cols, std::move(entries));
}

GameMatrix GameMatrix::Zero(std::size_t rows, std::size_t cols) {
  return GameMatrix(rows, cols, std::vector<double>(rows * cols, 0.0));
}

GameMatrix GameMatrix::Identity(std::size_t n) {
  std::vector<double> e(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1.0;
  return GameMatrix(n, n, std::move(e));
}

GameMatrix GameMatrix::Diagonal(std::span<const double> d) {
  const std::size_t n = d.size();
  std::vector<double> e(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = d[i];
  return GameMatrix(n, n, std::move(e));
}

double GameMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw InputError("matrix index out of range");
  return (*this)(i, j);
}

std::vector<std::vector<double>> GameMatrix::to_rows() const {
  std::vector<std::vector<double>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    out[i].assign(entries_.begin() + i * cols_,
                  entries_.begin() + (i + 1) * cols_);
  }
  return out;
}

double GameMatrix::min_entry() const {
  return *std::min_element(entries_.begin(), entries_.end());
}

double GameMatrix::max_entry() const {
  return *std::max_element(entries_.begin(), entries_.end());
}

double GameMatrix::inf_norm() const {
  double best = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) s += std::abs((*this)(i, j));
    best = std::max(best, s);
  }
  return best;
}

GameMatrix GameMatrix::transposed() const {
  std::vector<double> e(entries_.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) e[j * rows_ + i] = (*this)(i, j);
  }
  return GameMatrix(cols_, rows_, std::move(e));
}

GameMatrix GameMatrix::negated() const { return scaled(-1.0); }

GameMatrix GameMatrix::scaled(double c) const {
  std::vector<double> e = entries_;
  for (double& v : e) v *= c;
  return GameMatrix(rows_, cols_, std::move(e));
}

GameMatrix GameMatrix::shifted(double c) const {
  std::vector<double> e = entries_;
  for (double& v : e) v += c;
  return GameMatrix(rows_, cols_, std::move(e));
}

GameMatrix GameMatrix::minus_identity(double lambda) const {
  if (!is_square()) throw InputError("A - lambda*I needs a square matrix");
  std::vector<double> e = entries_;
  for (std::size_t i = 0; i < rows_; ++i) e[i * cols_ + i] -= lambda;
  return GameMatrix(rows_, cols_, std::move(e));
}

std::vector<double> GameMatrix::left_multiply(std::span<const double> x) const {
  if (x.size() != rows_) throw InputError("x^T A: dimension mismatch");
  std::vector<double> out(cols_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (x[i] == 0.0) continue;
    for (std::size_t j = 0; j < cols_; ++j) out[j] += x[i] * (*this)(i, j);
  }
  return out;
}

std::vector<double> GameMatrix::right_multiply(std::span<const double> y) const {
  if (y.size() != cols_) throw InputError("A y: dimension mismatch");
  std::vector<double> out(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * y[j];
    out[i] = s;
  }
  return out;
}

const char* PlayerName(Player p) { return p == Player::kRow ? "row" : "col"; }

MixedStrategy MixedStrategy::Pure(Player player, std::size_t size,
                                  std::size_t index) {
  if (index >= size) throw InputError("pure strategy index out of range");
  std::vector<double> w(size, 0.0);
  w[index] = 1.0;
  return MixedStrategy(player, std::move(w));
}

MixedStrategy MixedStrategy::Uniform(Player player, std::size_t size) {
  if (size == 0) throw InputError("strategy over an empty set");
  return MixedStrategy(player,
                       std::vector<double>(size, 1.0 / static_cast<double>(size)));
}

MixedStrategy ValidateStrategy(std::span<const double> weights, Player player) {
  if (weights.empty()) throw InputError("strategy has no entries");
  std::vector<double> w(weights.begin(), weights.end());
  for (double& v : w) {
    if (!std::isfinite(v)) throw InputError("strategy entry is not finite");
    if (v < -kNegativeClampTol) {
      throw InputError("strategy has negative entry " + std::to_string(v));
    }
    if (v < 0.0) v = 0.0;
  }
  const double sum = std::accumulate(w.begin(), w.end(), 0.0);
  if (std::abs(sum - 1.0) > kSumTol) {
    throw InputError("strategy sums to " + std::to_string(sum) + ", not 1");
  }
  for (double& v : w) v /= sum;
  return MixedStrategy(player, std::move(w));
}

double Payoff(const GameMatrix& a, const MixedStrategy& x,
              const MixedStrategy& y) {
  if (x.size() != a.rows() || y.size() != a.cols()) {
    throw InputError("payoff: strategy dimensions do not match the matrix");
  }
  const std::vector<double> ay = a.right_multiply(y.weights());
  double s = 0.0;
  for (std::size_t i = 0; i < ay.size(); ++i) s += x[i] * ay[i];
  return s;
}

double RowGuarantee(const GameMatrix& a, std::span<const double> x) {
  const std::vector<double> xa = a.left_multiply(x);
  return *std::min_element(xa.begin(), xa.end());
}

double ColCeiling(const GameMatrix& a, std::span<const double> y) {
  const std::vector<double> ay = a.right_multiply(y);
  return *std::max_element(ay.begin(), ay.end());
}

double InfNorm(std::span<const double> v) {
  double m = 0.0;
  for (double e : v) m = std::max(m, std::abs(e));
  return m;
}

double InfDistance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw InputError("vector length mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

}  // namespace matgame
