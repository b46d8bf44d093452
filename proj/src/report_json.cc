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

#include "matgame/report_json.h"

#include <algorithm>
#include <cmath>

#include "matgame/matrix_io.h"

namespace matgame {
namespace {

void Dump(const Json& j, int depth, std::string& out) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close_pad(2 * depth, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + Json(key).dump() + ": ";
        Dump(value, depth + 1, out);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Flat numeric arrays stay on one line.
      const bool flat = std::all_of(j.begin(), j.end(),
                                    [](const Json& e) { return e.is_primitive(); });
      if (flat) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i > 0) out += ", ";
          Dump(j[i], depth + 1, out);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) out += ",\n";
        out += pad;
        Dump(j[i], depth + 1, out);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? FormatDouble(v) : "null";
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

Json ToJson(const GameSolution& s) {
  Json j;
  j["value"] = s.value;
  j["row_strategy"] = s.row_strategy.weights();
  j["col_strategy"] = s.col_strategy.weights();
  j["duality_gap"] = s.duality_gap;
  j["tolerance"] = s.tolerance;
  return j;
}

Json ToJson(const OracleSolution& s) {
  Json j;
  j["value"] = s.value;
  j["row_support"] = s.row_support;
  j["col_support"] = s.col_support;
  j["row_strategy"] = s.row_strategy.weights();
  j["col_strategy"] = s.col_strategy.weights();
  return j;
}

Json ToJson(const SpectralCert& c) {
  Json j;
  j["perron_root"] = c.perron_root;
  j["perron_vector"] = c.perron_vector;
  j["residual"] = c.residual;
  j["iterations"] = c.iterations;
  return j;
}

Json ToJson(const KernelBasis& k) {
  Json j;
  j["dimension"] = k.dimension;
  j["basis"] = k.basis_vectors;
  return j;
}

Json ToJson(const GordanVerdict& g) {
  Json j;
  j["branch"] = GordanBranchName(g.branch);
  j["witness"] = g.witness;
  return j;
}

Json ToJson(const Quantity& q) {
  return std::visit([](const auto& v) { return Json(v); }, q);
}

Json ToJson(const ClaimReport& r, std::optional<std::size_t> trial) {
  Json j;
  if (trial) j["trial"] = *trial;
  j["claim_id"] = ClaimName(r.claim_id);
  j["input_digest"] = r.input_digest;
  Json computed = Json::object();
  for (const auto& [key, value] : r.computed) computed[key] = ToJson(value);
  j["computed"] = std::move(computed);
  j["verdict"] = VerdictName(r.verdict);
  j["tolerance"] = r.tolerance;
  return j;
}

VerdictCounts CountVerdicts(const std::vector<ClaimReport>& reports) {
  VerdictCounts c;
  for (const auto& r : reports) {
    switch (r.verdict) {
      case Verdict::kHolds:
        ++c.holds;
        break;
      case Verdict::kViolated:
        ++c.violated;
        break;
      case Verdict::kNotApplicable:
        ++c.not_applicable;
        break;
    }
  }
  return c;
}

Json VerifyDocument(const std::vector<ClaimReport>& reports,
                    const std::vector<std::size_t>& trials) {
  Json doc;
  Json list = Json::array();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    list.push_back(ToJson(reports[i], i < trials.size()
                                          ? std::optional<std::size_t>(trials[i])
                                          : std::nullopt));
  }
  doc["reports"] = std::move(list);
  const VerdictCounts c = CountVerdicts(reports);
  doc["summary"] = {{"holds", c.holds},
                    {"violated", c.violated},
                    {"not_applicable", c.not_applicable}};
  return doc;
}

std::string DumpJson(const Json& j) {
  std::string out;
  Dump(j, 0, out);
  out += '\n';
  return out;
}

}  // namespace matgame
