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

#include "qcoin/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qcoin/io.hpp"
#include "qcoin/random.hpp"

namespace qcoin {

namespace {

struct Slice {
    double fraction;
    Povm povm_a;
};

std::vector<Slice> schedule(const QuantumStrategy &strategy, double p) {
    std::vector<Slice> slices;
    slices.push_back({(1.0 + 3.0 * p) / 4.0, strategy.povm_a});
    for (int k = 0; k < 3; ++k) {
        slices.push_back({(1.0 - p) / 4.0, pauli_conjugate(strategy.povm_a, k)});
    }
    return slices;
}

void require_qubit_pair(const QuantumStrategy &strategy) {
    strategy.check();
    if (strategy.povm_a.dim() != 2 || strategy.povm_b.dim() != 2) {
        throw DomainError("the counting experiment is modeled for qubit pairs");
    }
}

std::int64_t draw_poisson(double mean, std::mt19937_64 &rng) {
    if (!(mean > 0.0)) {
        return 0;
    }
    std::poisson_distribution<std::int64_t> dist(mean);
    return dist(rng);
}

/// Linear-interpolated percentile of sorted data, q in [0, 100].
double percentile(const std::vector<double> &sorted, double q) {
    if (sorted.size() == 1) {
        return sorted.front();
    }
    double pos = q / 100.0 * static_cast<double>(sorted.size() - 1);
    auto lo = static_cast<std::size_t>(std::floor(pos));
    std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

}  // namespace

void AcquisitionPlan::check() const {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("p must lie in [0, 1]");
    }
    if (!(total_time > 0.0) || !std::isfinite(total_time)) {
        throw DomainError("total_time must be positive");
    }
    if (!(pair_rate > 0.0) || !std::isfinite(pair_rate)) {
        throw DomainError("pair_rate must be positive");
    }
}

std::int64_t CountsTable::total() const {
    std::int64_t t = 0;
    for (auto c : counts) {
        t += c;
    }
    return t;
}

RealMatrix expected_counts(const QuantumStrategy &strategy, const AcquisitionPlan &plan) {
    plan.check();
    require_qubit_pair(strategy);
    const int n = strategy.povm_a.size();
    RealMatrix mean = RealMatrix::Zero(n, strategy.povm_b.size());
    for (const auto &slice : schedule(strategy, plan.p)) {
        if (slice.fraction <= 0.0) {
            continue;
        }
        CoinState coin = born_coin({strategy.state, slice.povm_a, strategy.povm_b});
        mean += slice.fraction * plan.total_time * plan.pair_rate * coin.joint();
    }
    return mean;
}

CountsTable simulate_counts(const QuantumStrategy &strategy, const AcquisitionPlan &plan) {
    plan.check();
    require_qubit_pair(strategy);
    const int n = strategy.povm_a.size();
    if (strategy.povm_b.size() != n) {
        throw DomainError("both parties need the same number of outcomes");
    }
    CountsTable table;
    table.n = n;
    table.plan = plan;
    table.counts.assign(static_cast<std::size_t>(n * n), 0);
    auto slices = schedule(strategy, plan.p);
    for (std::size_t s = 0; s < slices.size(); ++s) {
        if (slices[s].fraction <= 0.0) {
            continue;
        }
        CoinState coin = born_coin({strategy.state, slices[s].povm_a, strategy.povm_b});
        const double slice_time = slices[s].fraction * plan.total_time;
        for (int cell = 0; cell < n * n; ++cell) {
            std::mt19937_64 rng(derive_seed(plan.seed, {s, static_cast<std::uint64_t>(cell)}));
            table.counts[static_cast<std::size_t>(cell)] +=
                draw_poisson(slice_time * plan.pair_rate * coin.probs()(cell), rng);
        }
    }
    return table;
}

CoinState estimate_coin_from_counts(const CountsTable &counts) {
    if (counts.n < 1 || counts.counts.size() != static_cast<std::size_t>(counts.n * counts.n)) {
        throw AnalysisError("counts table is not n x n");
    }
    for (auto c : counts.counts) {
        if (c < 0) {
            throw AnalysisError("negative coincidence count");
        }
    }
    const std::int64_t total = counts.total();
    if (total <= 0) {
        throw AnalysisError("all coincidence counts are zero");
    }
    RealVector p(counts.n * counts.n);
    for (int k = 0; k < counts.n * counts.n; ++k) {
        p(k) = static_cast<double>(counts.counts[static_cast<std::size_t>(k)]) / static_cast<double>(total);
    }
    return CoinState::from_probs(counts.n, counts.n, p);
}

PayoffEstimate bootstrap_payoff_interval(const CountsTable &counts, int resamples, std::uint64_t seed,
                                         double threshold) {
    if (resamples < 100) {
        throw DomainError("need at least 100 bootstrap resamples, got " + std::to_string(resamples));
    }
    const int n = counts.n;
    PayoffEstimate est;
    est.payoff = game_payoff(estimate_coin_from_counts(counts), n);
    est.bootstrap_samples = resamples;

    std::vector<double> payoffs(static_cast<std::size_t>(resamples));
    for (int r = 0; r < resamples; ++r) {
        std::mt19937_64 rng(derive_seed(seed, {0xB007u, static_cast<std::uint64_t>(r)}));
        CountsTable resampled{n, std::vector<std::int64_t>(counts.counts.size()), counts.plan};
        for (std::size_t k = 0; k < counts.counts.size(); ++k) {
            resampled.counts[k] = draw_poisson(static_cast<double>(counts.counts[k]), rng);
        }
        payoffs[static_cast<std::size_t>(r)] =
            resampled.total() > 0 ? game_payoff(estimate_coin_from_counts(resampled), n) : 0.0;
    }
    std::sort(payoffs.begin(), payoffs.end());
    est.ci_low = std::min(percentile(payoffs, 16.0), est.payoff);
    est.ci_high = std::max(percentile(payoffs, 84.0), est.payoff);
    est.exceeds_classical = est.ci_low > threshold;
    return est;
}

DensityOperator ingest_density_matrix(const std::filesystem::path &path) {
    return io::read_density_json(path, 1e-6);
}

QuantumStrategy trine_lab_strategy(const DensityOperator &lab_state) {
    if (lab_state.dim() != 4) {
        throw DomainError("expected a two-qubit state");
    }
    return lab_strategy(lab_state, canonical_povm(PovmKind::trine));
}

double predicted_noisy_payoff(const DensityOperator &lab_state, double p) {
    QuantumStrategy s = trine_lab_strategy(lab_state);
    s.povm_a = noisy_time_averaged_povm(s.povm_a, p);
    return game_payoff(born_coin(s), 3);
}

}  // namespace qcoin
