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

#include "doctest.h"
#include "qcoin/bridge.hpp"
#include "support.hpp"

using namespace qcoin;

namespace {

const Povm &trine() {
    static const Povm t = canonical_povm(PovmKind::trine);
    return t;
}

double coin_diff(const CoinState &a, const CoinState &b) {
    return max_abs_diff(a.probs(), b.probs());
}

}  // namespace

TEST_CASE("trine pair on the singlet gives the anti-correlated coin") {
    const CoinState coin = born_coin(symmetric_strategy(canonical_state(StateKind::singlet), trine()));
    CHECK(coin_diff(coin, canonical_coin(CoinKind::ac3)) < 1e-15);
}

TEST_CASE("the z-conjugated pair on the singlet only relabels outcomes") {
    // s_z e s_z swaps trine outcomes 2 and 3, so on the singlet this pairing
    // zeroes P(23) and P(32) instead of the diagonal and the payoff collapses.
    const QuantumStrategy s{canonical_state(StateKind::singlet), trine(), pauli_conjugate(trine(), 2)};
    const CoinState coin = born_coin(s);
    const Povm swapped = permute_outcomes(trine(), {0, 2, 1});
    CHECK(coin_diff(coin, born_coin({s.state, trine(), swapped})) < 1e-15);
    CHECK(game_payoff(coin, 3) < 1e-15);
}

TEST_CASE("lab frame and singlet frame agree") {
    for (int k = 0; k <= 20; ++k) {
        const double p = k / 20.0;
        const QuantumStrategy singlet_frame = symmetric_strategy(werner_state(p), trine());
        const QuantumStrategy lab = to_lab_frame(singlet_frame);
        CHECK(coin_diff(born_coin(singlet_frame), born_coin(lab)) < 1e-14);
    }
    const DensityOperator psi_plus = canonical_state(StateKind::psi_plus);
    const CoinState lab = born_coin(lab_strategy(psi_plus, trine()));
    CHECK(coin_diff(lab, canonical_coin(CoinKind::ac3)) < 1e-15);
    CHECK(approx_equal(to_lab_frame(symmetric_strategy(canonical_state(StateKind::singlet), trine())).state.matrix(),
                       psi_plus.matrix(), 1e-15));
}

TEST_CASE("Werner family reproduces the ideal payoff") {
    for (int k = 0; k <= 100; ++k) {
        const double p = k / 100.0;
        const CoinState coin = born_coin(symmetric_strategy(werner_state(p), trine()));
        CHECK(std::abs(game_payoff(coin, 3) - ideal_noisy_payoff(p)) < 1e-12);
        for (int i = 0; i < 3; ++i) {
            CHECK(std::abs(coin(i, i) - (1.0 - p) / 9.0) < 1e-12);
        }
    }
    const CoinState mixed = born_coin(symmetric_strategy(werner_state(0.0), trine()));
    CHECK((mixed.probs().array() - 1.0 / 9.0).abs().maxCoeff() < 1e-15);
}

TEST_CASE("ideal payoff") {
    CHECK(std::abs(ideal_noisy_payoff(1.0) - 1.0 / 6.0) < 1e-15);
    CHECK(std::abs(ideal_noisy_payoff(0.25) - 0.125) < 1e-15);
    CHECK(std::abs(ideal_noisy_payoff(0.0) - 1.0 / 9.0) < 1e-15);
    CHECK_THROWS_AS(ideal_noisy_payoff(1.2), DomainError);
}

TEST_CASE("time-averaged noisy POVM equals the Werner state") {
    const DensityOperator singlet = canonical_state(StateKind::singlet);
    for (int k = 0; k <= 20; ++k) {
        const double p = k / 20.0;
        const CoinState a = born_coin({singlet, noisy_time_averaged_povm(trine(), p), trine()});
        const CoinState b = born_coin(symmetric_strategy(werner_state(p), trine()));
        CHECK(coin_diff(a, b) <= 1e-12);
    }
}

TEST_CASE("tetrahedral SIC pair on the singlet wins G(4)") {
    const Povm sic = canonical_povm(PovmKind::tetra_sic);
    const CoinState coin = born_coin(symmetric_strategy(canonical_state(StateKind::singlet), sic));
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            CHECK(std::abs(coin(i, j) - (i == j ? 0.0 : 1.0 / 12.0)) <= 1e-12);
        }
    }
    CHECK(std::abs(game_payoff(coin, 4) - 1.0 / 12.0) <= 1e-12);
    CHECK(is_star_anticorrelated(coin, 1e-12));
    // Same statistics in the lab frame.
    const CoinState lab = born_coin(lab_strategy(canonical_state(StateKind::psi_plus), sic));
    CHECK(coin_diff(coin, lab) < 1e-14);
}

TEST_CASE("phi+ with antipodal measurements") {
    // On phi+, P(ij) = Tr(e_i f_j^T)/2. For the real trine, s_y e s_y flips the
    // Bloch vector, so pairing e_i with s_y e_i s_y zeroes the diagonal.
    const CoinState coin = born_coin({canonical_state(StateKind::phi_plus), trine(), pauli_conjugate(trine(), 1)});
    CHECK(is_star_anticorrelated(coin, 1e-12));
    CHECK(std::abs(game_payoff(coin, 3) - 1.0 / 6.0) < 1e-12);
}

TEST_CASE("classical embedding reproduces free operations") {
    const ClassicalStrategy opt = optimal_two_coin_strategy_g3();
    const CoinState embedded = born_coin(classical_embedding(opt.coin, opt.s_a, opt.s_b));
    CHECK(coin_diff(embedded, apply_free_operation(opt.coin, opt.s_a, opt.s_b)) < 1e-15);
    CHECK(std::abs(game_payoff(embedded, 3) - 0.125) < 1e-15);

    RealVector det(4);
    det << 1, 0, 0, 0;
    RealMatrix s(3, 2);
    s << 0, 1, 1, 0, 0, 0;
    const StochasticMap m = StochasticMap::from_matrix(s);
    const CoinState d = born_coin(classical_embedding(CoinState::from_probs(2, 2, det), m, m));
    CHECK(d(1, 1) == doctest::Approx(1.0));

    std::mt19937_64 rng(8);
    double worst = 0.0;
    for (int trial = 0; trial < 10000; ++trial) {
        const int d_out = 2 + trial % 3;
        const CoinState coin = testing::random_coin(rng, 2, 2);
        const StochasticMap sa = testing::random_map(rng, d_out, 2);
        const StochasticMap sb = testing::random_map(rng, d_out, 2);
        worst = std::max(worst,
                         coin_diff(born_coin(classical_embedding(coin, sa, sb)), apply_free_operation(coin, sa, sb)));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("dimension mismatch") {
    const QuantumStrategy bad{canonical_state(StateKind::singlet), canonical_povm(PovmKind::wh_sic_d3), trine()};
    CHECK_THROWS_AS(born_coin(bad), DomainError);
    CHECK_THROWS_AS(bad.check(), DomainError);
}
