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

#ifndef MATGAME_ENSEMBLE_H_
#define MATGAME_ENSEMBLE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "matgame/core.h"

namespace matgame {

// Reproducible random source. The engine is std::mt19937_64, whose output
// sequence is fixed by the C++ standard; conversions to doubles and indices
// are done here rather than through <random> distributions, whose algorithms
// are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }
  // Top 53 bits scaled into [0, 1).
  double Uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform01(); }
  // Uniform over [0, n) by rejection, n >= 1.
  std::uint64_t Index(std::uint64_t n);
  // Uniform integer in [lo, hi].
  std::int64_t Int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    Index(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::mt19937_64 engine_;
};

enum class Family { kDiagonal, kSkew, kPositive, kGeneral };

const char* FamilyName(Family f);
std::optional<Family> ParseFamily(std::string_view name);

inline constexpr double kPositiveFloor = 1e-3;

struct EnsembleSpec {
  Family family = Family::kGeneral;
  // Columns (and rows, unless `rows` is set for the General family).
  std::size_t size = 3;
  std::optional<std::size_t> rows;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  double lo = -1.0;
  double hi = 1.0;
};

// Throws InputError unless lo < hi, size >= 1 and the requested shape fits
// the family (only General may be non-square).
void ValidateEnsembleSpec(const EnsembleSpec& spec);

// One matrix drawn from the family. Entries are consumed from `rng` in
// row-major order:
//   Diagonal  n diagonal entries uniform in [lo, hi)
//   Skew      strictly upper entries uniform in [lo, hi), mirrored negated
//   Positive  all entries uniform in [max(lo, 1e-3), hi)
//   General   all entries uniform in [lo, hi)
GameMatrix RandomMatrix(Family family, std::size_t rows, std::size_t cols,
                        double lo, double hi, Rng& rng);

// `trials` matrices from a single Rng seeded with spec.seed.
std::vector<GameMatrix> GenerateEnsemble(const EnsembleSpec& spec);

}  // namespace matgame

#endif  // MATGAME_ENSEMBLE_H_
