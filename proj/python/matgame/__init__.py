# Copyright 2026 The matgame Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Zero-sum matrix games, Perron vectors and claim audits."""

from ._matgame import (
    ConvergenceError,
    GameSolution,
    GordanVerdict,
    InputError,
    InternalInconsistency,
    IterationLimitError,
    KernelBasis,
    MixedStrategy,
    OracleSolution,
    Player,
    SpectralCert,
    all_row_optima_dominated,
    check_diagonal,
    generate_ensemble,
    gordan,
    is_optimal_dominated,
    null_space,
    oracle_solve,
    parse_matrix,
    payoff,
    perron,
    render_matrix,
    solve_game,
    stochastic_eigenvector,
    validate_strategy,
    verify,
)

__version__ = "0.1.0"
