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

// Monte Carlo model of the coincidence-counting experiment and the analysis
// path from raw counts to a payoff with a bootstrap interval.

#include <cstdint>
#include <filesystem>
#include <vector>

#include "qcoin/bridge.hpp"
#include "qcoin/coin.hpp"

namespace qcoin {

/// Classical bound of the three-restaurant game from a two-faced coin.
inline constexpr double kClassicalBoundG3 = 0.125;

struct AcquisitionPlan {
    /// Depolarizing strength; p = 1 is noiseless.
    double p = 1.0;
    /// Seconds of acquisition per joint setting.
    double total_time = 3600.0;
    /// Expected coincidences per second at unit joint probability.
    double pair_rate = 2.0;
    std::uint64_t seed = 0;

    void check() const;
};

/// Coincidence counts, row-major over (i, j) with i Alice's outcome.
struct CountsTable {
    int n = 0;
    std::vector<std::int64_t> counts;
    AcquisitionPlan plan;

    std::int64_t at(int i, int j) const {
        return counts[static_cast<std::size_t>(i * n + j)];
    }
    std::int64_t total() const;
};

struct PayoffEstimate {
    double payoff = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    int bootstrap_samples = 0;
    bool exceeds_classical = false;

    double half_width() const {
        return 0.5 * (ci_high - ci_low);
    }
};

/// Time-split schedule: Alice's POVM as given for T(1+3p)/4, then each Pauli
/// conjugate s_k e s_k for T(1-p)/4. Each (slice, cell) draws an independent
/// Poisson count with mean slice_time * pair_rate * P_slice(ij) from its own
/// substream of plan.seed; slices are summed.
CountsTable simulate_counts(const QuantumStrategy &strategy, const AcquisitionPlan &plan);

/// Expected counts per cell under the same schedule (no sampling).
RealMatrix expected_counts(const QuantumStrategy &strategy, const AcquisitionPlan &plan);

/// P(ij) = C_ij / sum C. Throws AnalysisError on an all-zero table.
CoinState estimate_coin_from_counts(const CountsTable &counts);

/// Parametric Poisson bootstrap of the game payoff. Each resample redraws every
/// cell from Poisson(observed count); the interval is the 16th-84th percentile
/// of resampled payoffs, widened if needed to contain the observed payoff. An
/// all-zero resample scores payoff 0.
PayoffEstimate bootstrap_payoff_interval(const CountsTable &counts, int resamples, std::uint64_t seed,
                                         double threshold = kClassicalBoundG3);

/// Reads and validates a tomographed two-qubit density matrix (JSON with "dim",
/// "re", "im"), tolerance 1e-6.
DensityOperator ingest_density_matrix(const std::filesystem::path &path);

/// Noiseless lab-frame trine strategy on a measured state: s_z-conjugated trine
/// for Alice, trine for Bob.
QuantumStrategy trine_lab_strategy(const DensityOperator &lab_state);

/// Predicted payoff when Alice's trine is replaced by its time-averaged noisy
/// version of strength p.
double predicted_noisy_payoff(const DensityOperator &lab_state, double p);

}  // namespace qcoin
