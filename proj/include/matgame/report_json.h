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

#ifndef MATGAME_REPORT_JSON_H_
#define MATGAME_REPORT_JSON_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "matgame/claims.h"
#include "matgame/core.h"
#include "matgame/solver.h"
#include "matgame/spectral.h"

namespace matgame {

using Json = nlohmann::ordered_json;

Json ToJson(const GameSolution& s);
Json ToJson(const OracleSolution& s);
Json ToJson(const SpectralCert& c);
Json ToJson(const KernelBasis& k);
Json ToJson(const GordanVerdict& g);
Json ToJson(const Quantity& q);
// `trial` is included when set (ensemble runs).
Json ToJson(const ClaimReport& r, std::optional<std::size_t> trial = {});

struct VerdictCounts {
  std::size_t holds = 0;
  std::size_t violated = 0;
  std::size_t not_applicable = 0;
};

VerdictCounts CountVerdicts(const std::vector<ClaimReport>& reports);

// {"reports": [...], "summary": {"holds", "violated", "not_applicable"}}.
Json VerifyDocument(const std::vector<ClaimReport>& reports,
                    const std::vector<std::size_t>& trials);

// Pretty-printed JSON with two-space indentation in which every floating
// point number carries 17 significant digits. Non-finite numbers become null.
std::string DumpJson(const Json& j);

}  // namespace matgame

#endif  // MATGAME_REPORT_JSON_H_
