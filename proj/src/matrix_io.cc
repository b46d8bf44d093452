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

#include "matgame/matrix_io.h"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <vector>

#include "json.hpp"

namespace matgame {
namespace {

double ParseLiteral(std::string_view token) {
  double v = 0.0;
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw InputError("unparseable number '" + std::string(token) + "'");
  }
  return v;
}

std::vector<double> ParseCsvLine(std::string_view line) {
  std::vector<double> out;
  std::size_t pos = 0;
  bool expect_value = true;  // a comma was just seen (or line start)
  auto is_space = [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
  };
  while (true) {
    while (pos < line.size() && is_space(line[pos])) ++pos;
    if (pos == line.size()) break;
    if (line[pos] == ',') {
      if (expect_value) throw InputError("empty field in csv row");
      expect_value = true;
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < line.size() && line[end] != ',' && !is_space(line[end])) ++end;
    out.push_back(ParseLiteral(line.substr(pos, end - pos)));
    expect_value = false;
    pos = end;
  }
  if (expect_value && !out.empty()) throw InputError("trailing comma in csv row");
  return out;
}

GameMatrix ParseCsv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::vector<double> row = ParseCsvLine(text.substr(start, end - start));
    if (!row.empty()) {
      if (!rows.empty() && row.size() != rows.front().size()) {
        throw InputError("ragged rows: row " + std::to_string(rows.size() + 1) +
                         " has " + std::to_string(row.size()) +
                         " entries, expected " +
                         std::to_string(rows.front().size()));
      }
      rows.push_back(std::move(row));
    }
    start = end + 1;
  }
  if (rows.empty()) throw InputError("empty matrix input");
  return GameMatrix::FromRows(rows);
}

GameMatrix ParseJson(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("entries")) {
    throw InputError("json matrix must be an object with an 'entries' field");
  }
  const auto& entries = doc["entries"];
  if (!entries.is_array() || entries.empty()) {
    throw InputError("json 'entries' must be a nonempty array of rows");
  }
  std::vector<std::vector<double>> rows;
  for (const auto& r : entries) {
    if (!r.is_array()) throw InputError("json matrix row is not an array");
    std::vector<double> row;
    for (const auto& e : r) {
      if (!e.is_number()) throw InputError("json matrix entry is not a number");
      row.push_back(e.get<double>());
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw InputError("ragged rows in json matrix");
    }
    rows.push_back(std::move(row));
  }
  GameMatrix a = GameMatrix::FromRows(rows);
  auto check_dim = [&](const char* key, std::size_t actual) {
    if (!doc.contains(key)) return;
    const auto& d = doc[key];
    if (!d.is_number_unsigned() && !d.is_number_integer()) {
      throw InputError(std::string("json '") + key + "' must be an integer");
    }
    if (d.get<long long>() != static_cast<long long>(actual)) {
      throw InputError(std::string("declared ") + key + " " + d.dump() +
                       " does not match " + std::to_string(actual));
    }
  };
  check_dim("rows", a.rows());
  check_dim("cols", a.cols());
  return a;
}

}  // namespace

std::optional<MatrixFormat> ParseMatrixFormat(std::string_view name) {
  if (name == "csv") return MatrixFormat::kCsv;
  if (name == "json") return MatrixFormat::kJson;
  return std::nullopt;
}

MatrixFormat FormatFromPath(std::string_view path) {
  return path.ends_with(".json") ? MatrixFormat::kJson : MatrixFormat::kCsv;
}

GameMatrix ParseMatrix(std::string_view text, MatrixFormat format) {
  return format == MatrixFormat::kCsv ? ParseCsv(text) : ParseJson(text);
}

std::string FormatDouble(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string RenderMatrix(const GameMatrix& a, MatrixFormat format) {
  std::string out;
  if (format == MatrixFormat::kCsv) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (j > 0) out += ',';
        out += FormatDouble(a(i, j));
      }
      out += '\n';
    }
    return out;
  }
  out = "{\"rows\": " + std::to_string(a.rows()) +
        ", \"cols\": " + std::to_string(a.cols()) + ", \"entries\": " +
        CanonicalText(a) + "}\n";
  return out;
}

std::string CanonicalText(const GameMatrix& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i > 0) out += ',';
    out += '[';
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j > 0) out += ',';
      out += FormatDouble(a(i, j));
    }
    out += ']';
  }
  out += ']';
  return out;
}

}  // namespace matgame
