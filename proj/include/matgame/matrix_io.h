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

#ifndef MATGAME_MATRIX_IO_H_
#define MATGAME_MATRIX_IO_H_

#include <optional>
#include <string>
#include <string_view>

#include "matgame/core.h"

namespace matgame {

enum class MatrixFormat { kCsv, kJson };

std::optional<MatrixFormat> ParseMatrixFormat(std::string_view name);
// ".json" selects kJson, anything else kCsv.
MatrixFormat FormatFromPath(std::string_view path);

// csv:  one row per line; entries separated by a comma or by whitespace.
// json: {"rows": m, "cols": n, "entries": [[...], ...]}.
// Throws InputError on empty input, ragged rows, bad literals and declared
// dimensions that disagree with the entries.
GameMatrix ParseMatrix(std::string_view text, MatrixFormat format);

// Inverse of ParseMatrix; numbers are written with 17 significant digits so
// a round trip is exact.
std::string RenderMatrix(const GameMatrix& a, MatrixFormat format);

// "[[a,b],[c,d]]" with 17 significant digits. Used as the input digest of
// claim reports.
std::string CanonicalText(const GameMatrix& a);

// printf("%.17g").
std::string FormatDouble(double x);

}  // namespace matgame

#endif  // MATGAME_MATRIX_IO_H_
