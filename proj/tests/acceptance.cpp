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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "qcoin/commands.hpp"
#include "qcoin/experiment.hpp"
#include "qcoin/optimizer.hpp"

using namespace qcoin;
namespace fs = std::filesystem;

namespace {

const fs::path kData = QCOIN_TEST_DATA;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char *f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

SearchConfig restarts(int n, std::uint64_t seed = 1) {
    SearchConfig cfg;
    cfg.restarts = n;
    cfg.seed = seed;
    return cfg;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

RealVector random_simplex(std::mt19937_64 &rng, int n) {
    std::exponential_distribution<double> e;
    std::bernoulli_distribution sparse(0.2);
    RealVector v(n);
    for (int i = 0; i < n; ++i) {
        v(i) = sparse(rng) ? 0.0 : e(rng);
    }
    if (v.sum() == 0.0) {
        v(0) = 1.0;
    }
    return v / v.sum();
}

StochasticMap random_map(std::mt19937_64 &rng, int to, int from) {
    RealMatrix s(to, from);
    for (int c = 0; c < from; ++c) {
        s.col(c) = random_simplex(rng, to);
    }
    return StochasticMap::from_matrix(s);
}

Outcome ideal_curve() {
    const auto t0 = std::chrono::steady_clock::now();
    const Povm trine = canonical_povm(PovmKind::trine);
    double worst_singlet = 0.0;
    double worst_lab = 0.0;
    for (int k = 0; k <= 100; ++k) {
        const double p = k / 100.0;
        const QuantumStrategy s = symmetric_strategy(werner_state(p), trine);
        const double target = (2.0 + p) / 18.0;
        worst_singlet = std::max(worst_singlet, std::abs(game_payoff(born_coin(s), 3) - target));
        worst_lab = std::max(worst_lab, std::abs(game_payoff(born_coin(to_lab_frame(s)), 3) - target));
    }
    const double t = seconds_since(t0);
    return {worst_singlet <= 1e-12 && worst_lab <= 1e-12 && t < 1.0,
            fmt("max |payoff - (2+p)/18| = %.2e (singlet frame), %.2e (lab frame: s_z-conjugated trine on "
                "(s_z x I) W_p); %.3f s",
                worst_singlet, worst_lab, t)};
}

Outcome classical_g3() {
    const auto t0 = std::chrono::steady_clock::now();
    const SearchResult r = max_classical_payoff(2, 3, restarts(1000));
    const double t = seconds_since(t0);
    const ClassicalStrategy s = optimal_two_coin_strategy_g3();
    const double explicit_value = game_payoff(apply_free_operation(s.coin, s.s_a, s.s_b), 3);
    const bool pass = r.value >= 0.125 - 1e-9 && r.value <= 0.125 + 1e-6 &&
                      std::abs(explicit_value - 0.125) <= 1e-12 && t < 60.0;
    return {pass, fmt("search %.15f, explicit strategy %.15f; %.1f s", r.value, explicit_value, t)};
}

Outcome classical_g4() {
    const auto t0 = std::chrono::steady_clock::now();
    const double v24 = max_classical_payoff(2, 4, restarts(1000)).value;
    const double v34 = max_classical_payoff(3, 4, restarts(1000)).value;
    const double t = seconds_since(t0);
    const bool pass = std::abs(v24 - 1.0 / 15.0) <= 1e-6 && std::abs(v34 - 2.0 / 27.0) <= 1e-6 && t < 300.0;
    return {pass, fmt("(2,4) %.12f vs 1/15, (3,4) %.12f vs 2/27; %.1f s", v24, v34, t)};
}

Outcome unrestricted() {
    const double v3 = max_classical_payoff(3, 3, restarts(1000)).value;
    const double v4 = max_classical_payoff(4, 4, restarts(1000)).value;
    const bool pass = std::abs(v3 - 1.0 / 6.0) <= 1e-6 && std::abs(v4 - 1.0 / 12.0) <= 1e-6;
    return {pass, fmt("(3,3) %.12f vs 1/6, (4,4) %.12f vs 1/12", v3, v4)};
}

Outcome projective_bound() {
    const auto t0 = std::chrono::steady_clock::now();
    const SearchResult r = max_projective_simulable_payoff(3, restarts(1000));
    return {r.value <= 0.125 + 1e-6, fmt("best projective-simulable payoff %.12f; %.1f s", r.value, seconds_since(t0))};
}

Outcome infeasibility() {
    const auto t0 = std::chrono::steady_clock::now();
    const CoinState ac3 = canonical_coin(CoinKind::ac3);
    std::vector<double> gaps;
    for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
        gaps.push_back(coin_feasibility_distance(ac3, 2, restarts(10000, seed)).value);
    }
    const double lo = *std::min_element(gaps.begin(), gaps.end());
    const double hi = *std::max_element(gaps.begin(), gaps.end());
    const double mean = std::accumulate(gaps.begin(), gaps.end(), 0.0) / 5.0;
    RealVector v(9);
    v << 0, 1, 1, 1, 0, 1, 1, 1, 2;
    const double eighth = coin_feasibility_distance(CoinState::from_probs(3, 3, v / 8.0), 2, restarts(10000)).value;
    const bool pass = lo > 0.0 && hi <= 1.2 * mean && lo >= 0.8 * mean && eighth <= 1e-8;
    return {pass, fmt("ac3 gap over 5 seeds in [%.9f, %.9f]; 1/8-coin distance %.2e; %.1f s", lo, hi, eighth,
                      seconds_since(t0))};
}

Outcome sic_g4() {
    const CoinState coin =
        born_coin(symmetric_strategy(canonical_state(StateKind::singlet), canonical_povm(PovmKind::tetra_sic)));
    const double diag = coin.joint().diagonal().cwiseAbs().maxCoeff();
    const double payoff = game_payoff(coin, 4);
    return {diag <= 1e-12 && std::abs(payoff - 1.0 / 12.0) <= 1e-12,
            fmt("max diagonal %.2e, payoff %.15f (identical SIC pair on the singlet)", diag, payoff)};
}

Outcome noise_equivalence() {
    const Povm trine = canonical_povm(PovmKind::trine);
    const DensityOperator singlet = canonical_state(StateKind::singlet);
    double worst = 0.0;
    for (int k = 0; k <= 20; ++k) {
        const double p = k / 20.0;
        const CoinState a = born_coin({singlet, noisy_time_averaged_povm(trine, p), trine});
        const CoinState b = born_coin(symmetric_strategy(werner_state(p), trine));
        worst = std::max(worst, max_abs_diff(a.probs(), b.probs()));
    }
    return {worst <= 1e-12, fmt("max deviation %.2e over 21 p values and 9 cells", worst)};
}

Outcome embedding() {
    std::mt19937_64 rng(2);
    double worst = 0.0;
    for (int trial = 0; trial < 10000; ++trial) {
        const int d = 2 + trial % 4;
        const CoinState coin = CoinState::from_probs(2, 2, random_simplex(rng, 4));
        const StochasticMap sa = random_map(rng, d, 2);
        const StochasticMap sb = random_map(rng, d, 2);
        const CoinState q = born_coin(classical_embedding(coin, sa, sb));
        worst = std::max(worst, max_abs_diff(q.probs(), apply_free_operation(coin, sa, sb).probs()));
    }
    return {worst <= 1e-12, fmt("max deviation %.2e over 10^4 random inputs", worst)};
}

Outcome data_processing() {
    std::mt19937_64 rng(3);
    double worst = -1.0;
    for (int trial = 0; trial < 10000; ++trial) {
        const int d = 2 + trial % 3;
        const CoinState coin = CoinState::from_probs(d, d, random_simplex(rng, d * d));
        const CoinState out = apply_free_operation(coin, random_map(rng, 2 + trial % 4, d), random_map(rng, 3, d));
        worst = std::max(worst, mutual_information(out) - mutual_information(coin));
    }
    return {worst <= 1e-9, fmt("largest increase in I(X:Y) %.2e bits over 10^4 pairs", worst)};
}

Outcome certification() {
    const fs::path dir = fs::temp_directory_path() / "qcoin_acceptance";
    fs::create_directories(dir);
    const fs::path counts = dir / "counts.csv";
    int certified = 0;
    int width_ok = 0;
    double wmin = 1.0;
    double wmax = 0.0;
    double total = 0.0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        std::ostringstream out, err;
        cli::SimulateOptions sim;
        sim.p = 1.0;
        sim.time_s = 3600.0;
        sim.rate_hz = 1e4 / 3600.0;
        sim.seed = seed;
        sim.out = counts;
        if (cli::cmd_simulate(sim, out, err) != 0) {
            return {false, "simulate failed: " + err.str()};
        }
        std::ostringstream json_out;
        cli::CertifyOptions cert;
        cert.counts = counts;
        cert.resamples = 1000;
        cert.seed = seed;
        const int code = cli::cmd_certify(cert, json_out, err);
        const auto doc = io::json::parse(json_out.str());
        const double hw = 0.5 * (doc["ci_high"].get<double>() - doc["ci_low"].get<double>());
        total += doc["total_counts"].get<double>();
        certified += code == 0 ? 1 : 0;
        width_ok += (hw >= 0.001 && hw <= 0.01) ? 1 : 0;
        wmin = std::min(wmin, hw);
        wmax = std::max(wmax, hw);
    }
    return {certified >= 95 && width_ok == 100,
            fmt("certified %d/100 seeds; half-width in [%.4f, %.4f]; mean total counts %.0f", certified, wmin, wmax,
                total / 100.0)};
}

Outcome imperfect_state() {
    const DensityOperator lab = ingest_density_matrix(kData / "psi_plus_f097.json");
    const StateMetrics m = state_metrics(lab, psi_plus_vector());
    const double payoff = predicted_noisy_payoff(lab, 1.0);

    const fs::path csv = fs::temp_directory_path() / "qcoin_acceptance_sweep.csv";
    cli::SweepOptions sweep;
    sweep.p_start = 0.0;
    sweep.p_end = 1.0;
    sweep.p_step = 0.001;
    sweep.state_file = kData / "psi_plus_f097.json";
    sweep.out = csv;
    std::ostringstream out, err;
    if (cli::cmd_sweep(sweep, out, err) != 0) {
        return {false, "sweep failed: " + err.str()};
    }
    std::ifstream in(csv);
    std::string line;
    std::getline(in, line);
    double prev_p = -1.0;
    double prev_model = 0.0;
    std::vector<double> crossings;
    while (std::getline(in, line)) {
        double p, ideal, model, bound;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &p, &ideal, &model, &bound) != 4) {
            return {false, "unreadable sweep row: " + line};
        }
        if (prev_p >= 0.0 && (prev_model - bound) * (model - bound) <= 0.0 && prev_model != model) {
            crossings.push_back(prev_p + (bound - prev_model) * (p - prev_p) / (model - prev_model));
        }
        prev_p = p;
        prev_model = model;
    }
    const bool one_crossing = crossings.size() == 1 && crossings[0] > 0.25 && crossings[0] < 0.75;
    const bool pass = std::abs(*m.fidelity - 0.97) < 0.005 && payoff > 0.125 && payoff < 1.0 / 6.0 && one_crossing;
    return {pass, fmt("fidelity %.4f, purity %.4f, predicted payoff %.6f, sweep crosses 0.125 at p = %.4f",
                      *m.fidelity, m.purity, payoff, crossings.empty() ? -1.0 : crossings[0])};
}

Outcome simulability() {
    bool ok = true;
    std::string detail = "unsharp residuals";
    for (double lambda : {0.1, 0.5, 0.9}) {
        const SimulabilityReport r = projective_simulability(canonical_povm(PovmKind::unsharp, {.lambda = lambda}));
        ok = ok && r.simulable && r.residual <= 1e-6;
        detail += fmt(" %.1e", r.residual);
    }
    const SimulabilityReport t = projective_simulability(canonical_povm(PovmKind::trine));
    ok = ok && !t.simulable && t.residual >= 10 * kSimulabilityTol;
    return {ok, detail + fmt("; trine residual %.6f (not simulable)", t.residual)};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
        {"ideal payoff curve", ideal_curve},
        {"classical bound G(3)", classical_g3},
        {"classical bounds G(4)", classical_g4},
        {"unrestricted bound", unrestricted},
        {"projective-simulable bound", projective_bound},
        {"infeasibility of a perfect win", infeasibility},
        {"G(4) quantum strategy", sic_g4},
        {"noise-model equivalence", noise_equivalence},
        {"classical embedding", embedding},
        {"data-processing monotonicity", data_processing},
        {"Monte Carlo certification", certification},
        {"imperfect-state pipeline", imperfect_state},
        {"simulability classification", simulability},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
