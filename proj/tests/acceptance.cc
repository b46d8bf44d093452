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

// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "matgame/claims.h"
#include "matgame/cli.h"
#include "matgame/core.h"
#include "matgame/ensemble.h"
#include "matgame/matrix_io.h"
#include "matgame/solver.h"
#include "matgame/spectral.h"
#include "test_util.h"

namespace matgame {
namespace {

using Clock = std::chrono::steady_clock;
using ::matgame::testing::DataPath;
using ::matgame::testing::QuadraticPerron;
using ::matgame::testing::ReadFile;

// Collects failure messages for one criterion; only the first few are kept.
class Outcome {
 public:
  void Fail(const std::string& msg) {
    if (failures_++ < 3) detail_ += (detail_.empty() ? "" : "; ") + msg;
  }
  void Check(bool ok, const std::string& msg) {
    if (!ok) Fail(msg);
  }
  bool ok() const { return failures_ == 0; }
  std::string detail() const {
    return failures_ > 3 ? detail_ + " (+" + std::to_string(failures_ - 3) + " more)"
                         : detail_;
  }

 private:
  int failures_ = 0;
  std::string detail_;
};

std::string Str(double x) { return FormatDouble(x); }

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// 1. Rock-paper-scissors.
void RpsGolden(Outcome& o) {
  const GameMatrix a = ::matgame::testing::Rps();
  const auto start = Clock::now();
  const GameSolution s = SolveGame(a);
  const double elapsed = Seconds(start);
  o.Check(std::abs(s.value) <= 1e-9, "value " + Str(s.value));
  for (std::size_t i = 0; i < 3; ++i) {
    o.Check(std::abs(s.row_strategy[i] - 1.0 / 3) <= 1e-7, "row strategy");
    o.Check(std::abs(s.col_strategy[i] - 1.0 / 3) <= 1e-7, "col strategy");
  }
  // The oracle enumerates every equal-size support; a unique equilibrium means
  // it finds the full support.
  const OracleSolution oracle = OracleSolve(a);
  o.Check(oracle.row_support.size() == 3 && oracle.col_support.size() == 3,
          "oracle support not full");
  o.Check(std::abs(oracle.value) <= 1e-9, "oracle value " + Str(oracle.value));
  o.Check(elapsed < 0.010, "runtime " + Str(elapsed) + " s");
}

// 2. Definite diagonals against the harmonic formula.
void DefiniteDiagonals(Outcome& o) {
  Rng rng(2);
  const auto start = Clock::now();
  for (int sign : {1, -1}) {
    for (int t = 0; t < 200; ++t) {
      const std::size_t n = 1 + rng.Index(8);
      std::vector<double> d(n);
      for (double& x : d) x = sign * rng.Uniform(0.1, 10.0);
      double inv = 0.0;
      for (double x : d) inv += 1.0 / x;
      const double expected = 1.0 / inv;
      const GameSolution s = SolveGame(GameMatrix::Diagonal(d));
      o.Check(std::abs(s.value - expected) <= 1e-7,
              "value " + Str(s.value) + " vs " + Str(expected));
      double dev = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        dev = std::max(dev, std::abs(s.row_strategy[i] - expected / d[i]));
      }
      o.Check(dev <= 1e-6, "strategy deviation " + Str(dev));
    }
  }
  const double elapsed = Seconds(start);
  o.Check(elapsed < 5.0, "runtime " + Str(elapsed) + " s");
}

// 3. Mixed-sign diagonals.
void MixedDiagonals(Outcome& o) {
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + rng.Index(7);
    std::vector<double> d(n);
    for (double& x : d) x = (rng.Index(2) ? 1.0 : -1.0) * rng.Uniform(0.1, 10.0);
    // Force both signs to appear.
    const std::size_t p = rng.Index(n);
    std::size_t q = rng.Index(n - 1);
    if (q >= p) ++q;
    d[p] = std::abs(d[p]);
    d[q] = -std::abs(d[q]);
    const GameSolution s = SolveGame(GameMatrix::Diagonal(d));
    o.Check(std::abs(s.value) <= 1e-7, "value " + Str(s.value));
    double negative_weight = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i] < 0) negative_weight += s.row_strategy[i];
    }
    o.Check(negative_weight <= 1e-7, "negative weight " + Str(negative_weight));
  }
}

// 4. Skew-symmetric games.
void SkewGames(Outcome& o) {
  Rng rng(4);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + rng.Index(8);
    const GameMatrix a = RandomMatrix(Family::kSkew, n, n, -1.0, 1.0, rng);
    const GameSolution s = SolveGame(a);
    o.Check(std::abs(s.value) <= 1e-7, "value " + Str(s.value));
    // Played by the column player, x must hold every row to at most v.
    const std::vector<double> ax = a.right_multiply(s.row_strategy.weights());
    const double ceiling = *std::max_element(ax.begin(), ax.end());
    o.Check(ceiling <= s.value + 1e-7, "row optimum as column strategy allows " +
                                           Str(ceiling));
  }
}

// 5. v(A) = -v(-A^T).
void NegTranspose(Outcome& o) {
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = 1 + rng.Index(6);
    const std::size_t n = 1 + rng.Index(8);
    const GameMatrix a = RandomMatrix(Family::kGeneral, m, n, -1.0, 1.0, rng);
    const double v = SolveGame(a).value;
    const double w = SolveGame(a.transposed().negated()).value;
    o.Check(std::abs(v + w) <= 1e-7,
            std::to_string(m) + "x" + std::to_string(n) + " gap " + Str(v + w));
  }
}

// 6. Simplex against support enumeration.
void OracleEquivalence(Outcome& o) {
  Rng rng(6);
  for (int t = 0; t < 300; ++t) {
    const std::size_t m = 1 + rng.Index(5);
    const std::size_t n = 1 + rng.Index(5);
    const GameMatrix a = RandomMatrix(Family::kGeneral, m, n, -1.0, 1.0, rng);
    const double v = SolveGame(a).value;
    const double w = OracleSolve(a).value;
    o.Check(std::abs(v - w) <= 1e-7, CanonicalText(a) + " " + Str(v) + " vs " + Str(w));
  }
}

// 7. Exactly one Gordan branch, with a checked witness.
void GordanExclusive(Outcome& o) {
  Rng rng(7);
  const Family families[] = {Family::kDiagonal, Family::kSkew, Family::kPositive,
                             Family::kGeneral};
  for (int t = 0; t < 500; ++t) {
    const Family f = families[t % 4];
    const std::size_t n = 1 + rng.Index(6);
    const std::size_t m = f == Family::kGeneral ? 1 + rng.Index(6) : n;
    const GameMatrix a = RandomMatrix(f, m, n, -1.0, 1.0, rng);
    try {
      const GordanVerdict g = Gordan(a);
      if (g.branch == GordanBranch::kNonnegativeKernel) {
        const auto& x = g.witness;
        const double mass = std::accumulate(x.begin(), x.end(), 0.0);
        const double min_x = *std::min_element(x.begin(), x.end());
        const std::vector<double> ax = a.right_multiply(x);
        double res = 0.0;
        for (double r : ax) res = std::max(res, std::abs(r));
        o.Check(min_x >= -1e-9 && mass > 1e-9 && res <= 1e-7 * (1.0 + a.inf_norm()),
                "bad kernel witness for " + CanonicalText(a));
      } else {
        const std::vector<double> aty = a.left_multiply(g.witness);
        const double min_aty = *std::min_element(aty.begin(), aty.end());
        o.Check(min_aty > 0.0, "bad image witness for " + CanonicalText(a));
      }
    } catch (const InternalInconsistency& e) {
      o.Fail(std::string("inconsistent: ") + e.what());
    }
  }
}

// 8. Perron certificates.
void PerronCertificates(Outcome& o) {
  Rng rng(8);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng.Index(9);
    const GameMatrix a = RandomMatrix(Family::kPositive, n, n, 0.1, 10.0, rng);
    const SpectralCert c = Perron(a);
    o.Check(c.residual <= 1e-10, "residual " + Str(c.residual));
    double lo = kInf, hi = -kInf;
    for (std::size_t i = 0; i < n; ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < n; ++j) row += a(i, j);
      lo = std::min(lo, row);
      hi = std::max(hi, row);
    }
    const double slack = 1e-12 * hi;
    o.Check(lo - slack <= c.perron_root && c.perron_root <= hi + slack,
            "root " + Str(c.perron_root) + " outside row-sum bracket");
    o.Check(*std::min_element(c.perron_vector.begin(), c.perron_vector.end()) > 0.0,
            "vector not strictly positive");
    if (n == 2) {
      const auto q = QuadraticPerron(a);
      o.Check(std::abs(c.perron_root - q.root) <= 1e-9,
              "root " + Str(c.perron_root) + " vs " + Str(q.root));
    }
  }
  // Dedicated 2x2 sweep so the quadratic comparison always has coverage.
  for (int t = 0; t < 50; ++t) {
    const GameMatrix a = RandomMatrix(Family::kPositive, 2, 2, 0.1, 10.0, rng);
    const double root = Perron(a).perron_root;
    const double expected = QuadraticPerron(a).root;
    o.Check(std::abs(root - expected) <= 1e-9, "2x2 root " + Str(root) + " vs " +
                                                   Str(expected));
  }
}

// 9. Constant row-and-column-sum matrices: sum_k w_k P_k with random
// permutation matrices P_k and weights w_k > 0 has both sums equal to sum w.
void ShiftedEigen(Outcome& o) {
  Rng rng(9);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng.Index(6);
    const std::size_t k = 1 + rng.Index(4);
    std::vector<double> e(n * n, 0.0);
    double lambda = 0.0;
    for (std::size_t p = 0; p < k; ++p) {
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.Index(i)]);
      const double w = rng.Uniform(0.1, 2.0);
      lambda += w;
      for (std::size_t i = 0; i < n; ++i) e[i * n + perm[i]] += w;
    }
    const GameMatrix a(n, n, std::move(e));
    const ClaimReport r = CheckShiftedEigen(a, lambda);
    o.Check(r.verdict == Verdict::kHolds,
            CanonicalText(a) + " verdict " + VerdictName(r.verdict));
    const double v = SolveGame(a.minus_identity(lambda)).value;
    o.Check(std::abs(v) <= 1e-7, "v(A - lambda I) = " + Str(v));
  }
}

// 10. Optimal-dominance audit on fixed instances.
void DominanceAudit(Outcome& o) {
  const GameMatrix bad{{1, 2}, {3, 4}};
  const ClaimReport r = CheckPositiveDominated(bad);
  o.Check(r.verdict == Verdict::kViolated,
          std::string("[[1,2],[3,4]] verdict ") + VerdictName(r.verdict));
  const ClaimReport tight = CheckPositiveDominated(bad, kDefaultClaimTol,
                                                   kDefaultFeasTol / 10);
  o.Check(tight.verdict == Verdict::kViolated, "verdict changes at tighter LP tolerance");
  const MixedStrategy down = MixedStrategy::Pure(Player::kRow, 2, 1);
  o.Check(!IsOptimalDominated(bad, down, 3.0, kDefaultClaimTol),
          "(0,1) reported optimal-dominated");
  const ClaimReport good = CheckPositiveDominated(GameMatrix{{2, 1}, {1, 2}});
  o.Check(good.verdict == Verdict::kHolds,
          std::string("[[2,1],[1,2]] verdict ") + VerdictName(good.verdict));
}

// 11. Shift and scale covariance.
void Invariance(Outcome& o) {
  Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    const std::size_t m = 1 + rng.Index(6), n = 1 + rng.Index(6);
    const GameMatrix a = RandomMatrix(Family::kGeneral, m, n, -1.0, 1.0, rng);
    const double c = rng.Uniform(-5.0, 5.0);
    const double v = SolveGame(a).value;
    const double shifted = SolveGame(a.shifted(c)).value;
    o.Check(std::abs(shifted - (v + c)) <= 1e-7, "shift " + Str(shifted - v - c));
  }
  for (int t = 0; t < 100; ++t) {
    const std::size_t m = 1 + rng.Index(6), n = 1 + rng.Index(6);
    const GameMatrix a = RandomMatrix(Family::kGeneral, m, n, -1.0, 1.0, rng);
    const double c = rng.Uniform(0.1, 10.0);
    const double v = SolveGame(a).value;
    const double scaled = SolveGame(a.scaled(c)).value;
    o.Check(std::abs(scaled - c * v) <= 1e-7, "scale " + Str(scaled - c * v));
  }
}

// 12. CLI goldens, exit codes and text round trips.
void CliContract(Outcome& o) {
  struct Case {
    std::string golden;
    std::vector<std::string> args;
    int code;
  };
  const std::string rps = DataPath("rps.csv");
  const std::string saddle = DataPath("saddle.csv");
  const std::vector<Case> cases = {
      {"solve_rps", {"solve", "--input", rps, "--format", "csv"}, 0},
      {"solve_saddle", {"solve", "--input", saddle}, 0},
      {"oracle_rps", {"oracle", "--input", rps}, 0},
      {"oracle_saddle", {"oracle", "--input", saddle}, 0},
      {"analyze_rps", {"analyze", "--input", rps, "--lambda", "0", "--lambda", "1"}, 0},
      {"analyze_saddle", {"analyze", "--input", saddle, "--lambda", "5"}, 0},
      {"verify_rps_skew", {"verify", "--claim", "SkewZeroCor3", "--input", rps}, 0},
      {"verify_saddle_positive",
       {"verify", "--claim", "PositiveDominatedThm4", "--input", saddle}, 1},
      {"", {"solve", "--input", DataPath("ragged.csv")}, 2},
      {"", {"verify", "--claim", "NoSuchClaim", "--input", rps}, 2},
  };
  for (const Case& c : cases) {
    std::ostringstream out, err;
    const int code = RunCli(c.args, out, err);
    const std::string label = c.golden.empty() ? c.args[0] : c.golden;
    o.Check(code == c.code, label + " exit " + std::to_string(code));
    if (!c.golden.empty()) {
      o.Check(out.str() == ReadFile(DataPath(c.golden + ".golden.json")),
              label + " golden mismatch");
    }
  }
  Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    const std::size_t m = 1 + rng.Index(8), n = 1 + rng.Index(8);
    std::vector<double> e(m * n);
    // Full-precision values across many magnitudes.
    for (double& x : e) x = rng.Uniform(-1.0, 1.0) * std::pow(10.0, rng.Int(-8, 8));
    const GameMatrix a(m, n, std::move(e));
    for (MatrixFormat f : {MatrixFormat::kCsv, MatrixFormat::kJson}) {
      o.Check(ParseMatrix(RenderMatrix(a, f), f) == a, "round trip " + CanonicalText(a));
    }
  }
}

struct Criterion {
  int id;
  const char* name;
  std::function<void(Outcome&)> run;
};

}  // namespace
}  // namespace matgame

int main() {
  using namespace matgame;
  const std::vector<Criterion> criteria = {
      {1, "rps_golden", RpsGolden},
      {2, "definite_diagonals", DefiniteDiagonals},
      {3, "mixed_sign_diagonals", MixedDiagonals},
      {4, "skew_symmetric", SkewGames},
      {5, "neg_transpose_identity", NegTranspose},
      {6, "oracle_equivalence", OracleEquivalence},
      {7, "gordan_exclusivity", GordanExclusive},
      {8, "perron_certificates", PerronCertificates},
      {9, "shifted_eigen", ShiftedEigen},
      {10, "dominance_audit", DominanceAudit},
      {11, "shift_scale_invariance", Invariance},
      {12, "cli_contract", CliContract},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.Fail(std::string("uncaught: ") + e.what());
    }
    std::printf("%s %2d %s%s%s\n", o.ok() ? "PASS" : "FAIL", c.id, c.name,
                o.ok() ? "" : "  ", o.detail().c_str());
    if (!o.ok()) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
