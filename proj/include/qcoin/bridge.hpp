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

// Quantum strategies and the Born-rule map from (state, local POVMs) to a coin.
//
// Two equivalent frames appear in this library. In the singlet frame the state
// is built on |psi-> and both parties measure the same POVM. In the lab frame
// the source emits |psi+> = (s_z x I)|psi-> and Alice instead measures
// s_z e_i s_z. Both produce the same coin; `to_lab_frame` converts.

#include "qcoin/coin.hpp"
#include "qcoin/measurement.hpp"
#include "qcoin/states.hpp"

namespace qcoin {

struct QuantumStrategy {
    DensityOperator state;
    Povm povm_a;
    Povm povm_b;

    /// Throws DomainError unless state dim == povm_a.dim() * povm_b.dim().
    void check() const;
};

/// P(ij) = Tr[rho (e_i x f_j)]. Negative values down to -1e-12 are clipped to
/// zero; anything below that is a DomainError.
CoinState born_coin(const QuantumStrategy &strategy);

/// Payoff (2 + p)/18 of the noisy trine strategy on a Werner state.
double ideal_noisy_payoff(double p);

/// Diagonal state sum a_ij |ij><ij| and diagonal POVMs e^k = sum_i S(k, i)|i><i|
/// reproducing apply_free_operation(coin, s_a, s_b) through born_coin.
QuantumStrategy classical_embedding(const CoinState &coin, const StochasticMap &s_a, const StochasticMap &s_b);

/// Same POVM on both sides of a singlet-frame state.
QuantumStrategy symmetric_strategy(const DensityOperator &state, const Povm &povm);

/// Rotates a singlet-frame strategy into the lab frame: state (s_z x I) rho (s_z x I),
/// Alice's POVM s_z e s_z. Born statistics are unchanged.
QuantumStrategy to_lab_frame(const QuantumStrategy &singlet_frame);

/// Lab-frame strategy for a measured state: Alice s_z-conjugated POVM, Bob plain.
QuantumStrategy lab_strategy(const DensityOperator &lab_state, const Povm &povm);

}  // namespace qcoin
