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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "matgame/claims.h"
#include "matgame/core.h"
#include "matgame/ensemble.h"
#include "matgame/matrix_io.h"
#include "matgame/report_json.h"
#include "matgame/solver.h"
#include "matgame/spectral.h"

namespace py = pybind11;

namespace matgame {
namespace {

using Rows = std::vector<std::vector<double>>;

GameMatrix ToMatrix(const Rows& rows) { return GameMatrix::FromRows(rows); }

// Claim reports cross the boundary as plain dicts built from the same JSON
// the CLI emits.
py::object JsonToPython(const Json& j) {
  py::module_ json = py::module_::import("json");
  return json.attr("loads")(j.dump());
}

void BindTypes(py::module_& m) {
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<InternalInconsistency>(m, "InternalInconsistency",
                                                PyExc_RuntimeError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError",
                                           PyExc_RuntimeError);
  py::register_exception<IterationLimitError>(m, "IterationLimitError",
                                              PyExc_RuntimeError);

  py::enum_<Player>(m, "Player")
      .value("Row", Player::kRow)
      .value("Col", Player::kCol);

  py::class_<MixedStrategy>(m, "MixedStrategy")
      .def_property_readonly("player", &MixedStrategy::player)
      .def_property_readonly("weights", &MixedStrategy::weights)
      .def("__len__", &MixedStrategy::size)
      .def("__repr__", [](const MixedStrategy& s) {
        std::string out = std::string("MixedStrategy(") + PlayerName(s.player()) + ", [";
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (i > 0) out += ", ";
          out += FormatDouble(s[i]);
        }
        return out + "])";
      });

  py::class_<GameSolution>(m, "GameSolution")
      .def_readonly("value", &GameSolution::value)
      .def_readonly("row_strategy", &GameSolution::row_strategy)
      .def_readonly("col_strategy", &GameSolution::col_strategy)
      .def_readonly("duality_gap", &GameSolution::duality_gap)
      .def_readonly("tolerance", &GameSolution::tolerance);

  py::class_<OracleSolution>(m, "OracleSolution")
      .def_readonly("value", &OracleSolution::value)
      .def_readonly("row_support", &OracleSolution::row_support)
      .def_readonly("col_support", &OracleSolution::col_support)
      .def_readonly("row_strategy", &OracleSolution::row_strategy)
      .def_readonly("col_strategy", &OracleSolution::col_strategy);

  py::class_<SpectralCert>(m, "SpectralCert")
      .def_readonly("perron_root", &SpectralCert::perron_root)
      .def_readonly("perron_vector", &SpectralCert::perron_vector)
      .def_readonly("residual", &SpectralCert::residual)
      .def_readonly("iterations", &SpectralCert::iterations);

  py::class_<KernelBasis>(m, "KernelBasis")
      .def_readonly("dimension", &KernelBasis::dimension)
      .def_readonly("basis_vectors", &KernelBasis::basis_vectors);

  py::class_<GordanVerdict>(m, "GordanVerdict")
      .def_property_readonly("branch",
                             [](const GordanVerdict& g) {
                               return std::string(GordanBranchName(g.branch));
                             })
      .def_readonly("witness", &GordanVerdict::witness);
}

void BindOperations(py::module_& m) {
  m.def(
      "validate_strategy",
      [](const std::vector<double>& w, Player p) { return ValidateStrategy(w, p); },
      py::arg("weights"), py::arg("player") = Player::kRow);
  m.def(
      "payoff",
      [](const Rows& a, const std::vector<double>& x, const std::vector<double>& y) {
        return Payoff(ToMatrix(a), ValidateStrategy(x, Player::kRow),
                      ValidateStrategy(y, Player::kCol));
      },
      py::arg("matrix"), py::arg("x"), py::arg("y"));
  m.def(
      "solve_game",
      [](const Rows& a, double tol) { return SolveGame(ToMatrix(a), tol); },
      py::arg("matrix"), py::arg("tol") = 1e-9,
      "Value and one optimal strategy per player.");
  m.def(
      "oracle_solve", [](const Rows& a) { return OracleSolve(ToMatrix(a)); },
      py::arg("matrix"), "Support enumeration for games up to 5x5.");
  m.def(
      "is_optimal_dominated",
      [](const Rows& a, const std::vector<double>& s, Player p, double v,
         double tol) {
        return IsOptimalDominated(ToMatrix(a), ValidateStrategy(s, p), v, tol);
      },
      py::arg("matrix"), py::arg("strategy"), py::arg("player"), py::arg("value"),
      py::arg("tol") = kDefaultClaimTol);
  m.def(
      "all_row_optima_dominated",
      [](const Rows& a, double v, double tol) {
        return AllRowOptimaDominated(ToMatrix(a), v, tol);
      },
      py::arg("matrix"), py::arg("value"), py::arg("tol") = kDefaultClaimTol);
  m.def(
      "perron", [](const Rows& a, double tol) { return Perron(ToMatrix(a), tol); },
      py::arg("matrix"), py::arg("tol") = kPerronResidualTol);
  m.def(
      "null_space",
      [](const Rows& a, double rank_tol) { return NullSpace(ToMatrix(a), rank_tol); },
      py::arg("matrix"), py::arg("rank_tol") = kDefaultRankTol);
  m.def(
      "stochastic_eigenvector",
      [](const Rows& a, double lambda) -> std::optional<std::vector<double>> {
        auto s = StochasticEigenvector(ToMatrix(a), lambda);
        if (!s) return std::nullopt;
        return s->weights();
      },
      py::arg("matrix"), py::arg("lam"));
  m.def(
      "gordan", [](const Rows& a) { return Gordan(ToMatrix(a)); },
      py::arg("matrix"));

  m.def(
      "verify",
      [](const std::string& claim, const Rows& a, double tol,
         const std::vector<double>& lambdas) {
        const auto id = ParseClaimId(claim);
        if (!id) throw InputError("unknown claim '" + claim + "'");
        const ClaimParams params{.tol = tol, .lp_tol = kDefaultFeasTol,
                                 .lambdas = lambdas};
        py::list out;
        for (const auto& r : RunClaim(*id, ToMatrix(a), params)) {
          out.append(JsonToPython(ToJson(r)));
        }
        return out;
      },
      py::arg("claim"), py::arg("matrix"), py::arg("tol") = kDefaultClaimTol,
      py::arg("lambdas") = std::vector<double>{},
      "Audit one claim on a matrix; returns a list of report dicts.");
  m.def(
      "check_diagonal",
      [](const std::vector<double>& d, double tol) {
        return JsonToPython(ToJson(CheckDiagonal(d, tol)));
      },
      py::arg("diagonal"), py::arg("tol") = kDefaultClaimTol);

  m.def(
      "generate_ensemble",
      [](const std::string& family, std::size_t size, std::size_t trials,
         std::uint64_t seed, double lo, double hi, std::optional<std::size_t> rows) {
        const auto f = ParseFamily(family);
        if (!f) throw InputError("unknown family '" + family + "'");
        std::vector<Rows> out;
        for (const auto& a : GenerateEnsemble({.family = *f,
                                               .size = size,
                                               .rows = rows,
                                               .trials = trials,
                                               .seed = seed,
                                               .lo = lo,
                                               .hi = hi})) {
          out.push_back(a.to_rows());
        }
        return out;
      },
      py::arg("family"), py::arg("size"), py::arg("trials") = 1,
      py::arg("seed") = 0, py::arg("lo") = -1.0, py::arg("hi") = 1.0,
      py::arg("rows") = std::nullopt);

  m.def(
      "parse_matrix",
      [](const std::string& text, const std::string& format) {
        const auto f = ParseMatrixFormat(format);
        if (!f) throw InputError("format must be csv or json");
        return ParseMatrix(text, *f).to_rows();
      },
      py::arg("text"), py::arg("format") = "csv");
  m.def(
      "render_matrix",
      [](const Rows& a, const std::string& format) {
        const auto f = ParseMatrixFormat(format);
        if (!f) throw InputError("format must be csv or json");
        return RenderMatrix(ToMatrix(a), *f);
      },
      py::arg("matrix"), py::arg("format") = "csv");
}

}  // namespace
}  // namespace matgame

PYBIND11_MODULE(_matgame, m) {
  m.doc() = "Zero-sum matrix games, Perron vectors and claim audits.";
  matgame::BindTypes(m);
  matgame::BindOperations(m);
}
