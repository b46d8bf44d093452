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

#include "matgame/cli.h"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "matgame/claims.h"
#include "matgame/ensemble.h"
#include "matgame/matrix_io.h"
#include "matgame/report_json.h"
#include "matgame/solver.h"
#include "matgame/spectral.h"

namespace matgame {
namespace {

struct InputOptions {
  std::string path;
  std::string format;
};

void AddInputOptions(CLI::App* cmd, InputOptions& in, bool required) {
  auto* opt = cmd->add_option("--input", in.path, "matrix file (csv or json)");
  if (required) opt->required();
  cmd->add_option("--format", in.format,
                  "csv or json (default: from the file extension)")
      ->check(CLI::IsMember({"csv", "json"}));
}

GameMatrix LoadMatrix(const InputOptions& in) {
  std::ifstream f(in.path, std::ios::binary);
  if (!f) throw InputError("cannot open input file '" + in.path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  const MatrixFormat fmt = in.format.empty()
                               ? FormatFromPath(in.path)
                               : *ParseMatrixFormat(in.format);
  return ParseMatrix(buf.str(), fmt);
}

void Emit(const Json& doc, const std::string& output, std::ostream& out) {
  const std::string text = DumpJson(doc);
  if (output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(output, std::ios::binary);
  if (!f) throw InputError("cannot open output file '" + output + "'");
  f << text;
}

Json OptionalStrategy(const std::optional<MixedStrategy>& s) {
  return s ? Json(s->weights()) : Json(nullptr);
}

struct Job {
  std::size_t trial;
  GameMatrix matrix;
};

// Evaluates every job on `workers` threads; results keep job order.
std::vector<std::vector<ClaimReport>> RunJobs(const std::vector<Job>& jobs,
                                              const std::vector<ClaimId>& claims,
                                              const ClaimParams& params,
                                              unsigned workers) {
  std::vector<std::vector<ClaimReport>> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        for (ClaimId id : claims) {
          auto reports = RunClaim(id, jobs[i].matrix, params);
          results[i].insert(results[i].end(), reports.begin(), reports.end());
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, jobs.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Zero-sum matrix game solver and spectral claim auditor",
               "matgame"};
  app.require_subcommand(1);
  std::string output;

  InputOptions solve_in;
  double solve_tol = 1e-9;
  auto* solve = app.add_subcommand("solve", "value and optimal strategies");
  AddInputOptions(solve, solve_in, true);
  solve->add_option("--tol", solve_tol, "duality-gap tolerance")
      ->check(CLI::PositiveNumber);
  solve->add_option("--output", output, "write JSON here instead of stdout");

  InputOptions analyze_in;
  std::vector<double> analyze_lambdas;
  auto* analyze = app.add_subcommand("analyze", "spectral structure");
  AddInputOptions(analyze, analyze_in, true);
  analyze->add_option("--lambda", analyze_lambdas,
                      "eigenvalue to query for stochastic eigenvectors")
      ->allow_extra_args(false);
  analyze->add_option("--output", output, "write JSON here instead of stdout");

  InputOptions verify_in;
  std::string claim_name;
  std::string family_name;
  std::size_t size = 3;
  std::size_t rows = 0;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  double lo = -1.0;
  double hi = 1.0;
  double verify_tol = kDefaultClaimTol;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::vector<double> verify_lambdas;
  auto* verify = app.add_subcommand("verify", "audit claims on matrices");
  verify->add_option("--claim", claim_name, "claim id, or 'all'")->required();
  AddInputOptions(verify, verify_in, false);
  auto* ensemble_opt =
      verify->add_option("--ensemble", family_name,
                         "Diagonal, Skew, Positive or General");
  verify->get_option("--input")->excludes(ensemble_opt);
  verify->add_option("--size", size, "columns (and rows)")->check(CLI::PositiveNumber);
  verify->add_option("--rows", rows, "rows of General matrices (default: --size)");
  verify->add_option("--trials", trials, "matrices to draw")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "64-bit generator seed");
  verify->add_option("--lo", lo, "lower end of the entry range");
  verify->add_option("--hi", hi, "upper end of the entry range");
  verify->add_option("--tol", verify_tol, "verdict tolerance")
      ->check(CLI::PositiveNumber);
  verify->add_option("--lambda", verify_lambdas, "candidate eigenvalue")
      ->allow_extra_args(false);
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--output", output, "write JSON here instead of stdout");

  InputOptions oracle_in;
  auto* oracle = app.add_subcommand("oracle", "support enumeration (<= 5x5)");
  AddInputOptions(oracle, oracle_in, true);
  oracle->add_option("--output", output, "write JSON here instead of stdout");

  std::vector<const char*> argv{"matgame"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInputError;
  }

  try {
    if (solve->parsed()) {
      Emit(ToJson(SolveGame(LoadMatrix(solve_in), solve_tol)), output, out);
      return kExitOk;
    }
    if (oracle->parsed()) {
      Emit(ToJson(OracleSolve(LoadMatrix(oracle_in))), output, out);
      return kExitOk;
    }
    if (analyze->parsed()) {
      const GameMatrix a = LoadMatrix(analyze_in);
      if (!analyze_lambdas.empty() && !a.is_square()) {
        throw InputError("--lambda needs a square matrix");
      }
      Json doc;
      doc["rows"] = a.rows();
      doc["cols"] = a.cols();
      doc["perron"] = a.is_square() && a.min_entry() > 0.0
                          ? ToJson(Perron(a))
                          : Json(nullptr);
      doc["null_space"] = ToJson(NullSpace(a));
      doc["gordan"] = ToJson(Gordan(a));
      Json eig = Json::array();
      for (double lambda : analyze_lambdas) {
        Json e;
        e["lambda"] = lambda;
        e["right"] = OptionalStrategy(StochasticEigenvector(a, lambda, Player::kCol));
        e["left"] = OptionalStrategy(
            StochasticEigenvector(a.transposed(), lambda, Player::kRow));
        eig.push_back(std::move(e));
      }
      doc["stochastic_eigenvectors"] = std::move(eig);
      Emit(doc, output, out);
      return kExitOk;
    }

    // verify
    std::vector<ClaimId> claims;
    if (claim_name == "all") {
      claims.assign(std::begin(kAllClaims), std::end(kAllClaims));
    } else if (auto id = ParseClaimId(claim_name)) {
      claims.push_back(*id);
    } else {
      throw InputError("unknown claim '" + claim_name + "'");
    }
    std::vector<Job> work;
    if (!verify_in.path.empty()) {
      work.push_back({0, LoadMatrix(verify_in)});
    } else if (!family_name.empty()) {
      const auto family = ParseFamily(family_name);
      if (!family) throw InputError("unknown ensemble family '" + family_name + "'");
      EnsembleSpec spec{.family = *family,
                        .size = size,
                        .rows = rows > 0 ? std::optional<std::size_t>(rows)
                                         : std::nullopt,
                        .trials = trials,
                        .seed = seed,
                        .lo = lo,
                        .hi = hi};
      std::vector<GameMatrix> matrices = GenerateEnsemble(spec);
      for (std::size_t t = 0; t < matrices.size(); ++t) {
        work.push_back({t, std::move(matrices[t])});
      }
    } else {
      throw InputError("verify needs --input or --ensemble");
    }

    const ClaimParams params{.tol = verify_tol,
                             .lp_tol = kDefaultFeasTol,
                             .lambdas = verify_lambdas};
    const auto per_job = RunJobs(work, claims, params, jobs);
    std::vector<ClaimReport> reports;
    std::vector<std::size_t> trial_ids;
    for (std::size_t i = 0; i < per_job.size(); ++i) {
      for (const auto& r : per_job[i]) {
        reports.push_back(r);
        trial_ids.push_back(work[i].trial);
      }
    }
    Emit(VerifyDocument(reports, trial_ids), output, out);
    return CountVerdicts(reports).violated > 0 ? kExitViolated : kExitOk;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace matgame
