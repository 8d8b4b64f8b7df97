// Copyright 2026 The qcoin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Multi-start searches over classical and quantum strategies.
//
// Every search draws `restarts` random starting points, each from its own
// generator seeded by (seed, restart index), refines each start locally, and
// reduces to the best value with ties going to the lowest restart index. The
// result does not depend on how restarts are scheduled across threads.

#include <cstdint>
#include <vector>

#include "qcoin/bridge.hpp"
#include "qcoin/coin.hpp"

namespace qcoin {

struct SearchConfig {
    int restarts = 1000;
    std::uint64_t seed = 1;
    /// Objective-evaluation budget for one local refinement.
    int max_iterations = 4000;
    double convergence_tol = 1e-13;
    /// 0 picks std::thread::hardware_concurrency().
    int threads = 0;

    void check() const;
};

struct SearchResult {
    double value = 0.0;
    /// Best point found; layout documented per search.
    std::vector<double> argument;
    std::vector<double> per_restart_values;
    bool converged = false;
    std::uint64_t seed = 0;
};

/// Maps an unconstrained vector onto the probability simplex by squared
/// magnitudes x_i^2 / sum x_j^2. All-zero input maps to the barycenter.
RealVector squared_magnitude_simplex(const RealVector &raw);

// ---------------------------------------------------------------------------
// Classical bound: max over a two-m-coin and local maps m -> n of the game payoff.
//
// argument layout: joint coin (m*m, row-major), then S_A (n x m, column-major),
// then S_B (n x m, column-major).

SearchResult max_classical_payoff(int m, int n, const SearchConfig &cfg);

/// Payoff of the classical strategy stored in a max_classical_payoff argument.
double evaluate_classical_argument(int m, int n, const std::vector<double> &argument);

/// Unpacks a max_classical_payoff / coin_feasibility_distance argument.
ClassicalStrategy unpack_classical_argument(int m, int n, const std::vector<double> &argument);

// ---------------------------------------------------------------------------
// Projective-simulable bound: arbitrary two-qubit state, one projective qubit
// measurement per side, post-processing 2 -> n per side.
//
// argument layout: 16 reals for the lower-triangular factor L (4 real diagonal
// entries, then 6 complex strictly-lower entries as re, im in row-major order),
// Alice's Bloch direction (3, normalized on use), Bob's Bloch direction (3),
// S_A (n x 2, column-major), S_B (n x 2, column-major). rho = L L^dagger / Tr.

SearchResult max_projective_simulable_payoff(int n, const SearchConfig &cfg);

double evaluate_projective_simulable_argument(int n, const std::vector<double> &argument);

/// The strategy a projective-simulable argument describes, as a QuantumStrategy
/// whose POVMs are the post-processed projective measurements.
QuantumStrategy unpack_projective_simulable_argument(int n, const std::vector<double> &argument);

// ---------------------------------------------------------------------------
// Distance from `target` (d x d) to the set reachable from two-m-coins by local
// stochastic maps m -> d. Euclidean norm over joint probabilities.
//
// argument layout matches max_classical_payoff with n = d.

SearchResult coin_feasibility_distance(const CoinState &target, int m, const SearchConfig &cfg);

double evaluate_feasibility_argument(const CoinState &target, int m, const std::vector<double> &argument);

// ---------------------------------------------------------------------------
// Smallest total diagonal mass sum_i P(ii) obtainable from the maximally
// entangled state |phi+_d> with two n-outcome rank-one POVMs.
//
// Each side draws n weighted rank-one operators A_k = w_k |v_k><v_k| and uses
// e_k = S^{-1/2} A_k S^{-1/2} with S = sum_k A_k, so completeness holds by
// construction. argument layout per side: n blocks of (w, Re v, Im v), Alice
// first. A singular S is an infeasible point and marks the result non-converged.

SearchResult min_diagonal_mass(int d_local, int n_outcomes, const SearchConfig &cfg);

/// The POVM pair encoded by a min_diagonal_mass argument.
std::pair<Povm, Povm> unpack_diagonal_mass_argument(int d_local, int n_outcomes, const std::vector<double> &argument);

double evaluate_diagonal_mass_argument(int d_local, int n_outcomes, const std::vector<double> &argument);

}  // namespace qcoin
