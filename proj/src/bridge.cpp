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

#include "qcoin/bridge.hpp"

#include <sstream>

namespace qcoin {

void QuantumStrategy::check() const {
    if (state.dim() != povm_a.dim() * povm_b.dim()) {
        throw DomainError("state dimension " + std::to_string(state.dim()) + " does not match local POVM dimensions " +
                          std::to_string(povm_a.dim()) + " x " + std::to_string(povm_b.dim()));
    }
}

CoinState born_coin(const QuantumStrategy &strategy) {
    strategy.check();
    const int na = strategy.povm_a.size();
    const int nb = strategy.povm_b.size();
    const ComplexMatrix &rho = strategy.state.matrix();
    RealMatrix joint(na, nb);
    for (int i = 0; i < na; ++i) {
        for (int j = 0; j < nb; ++j) {
            double v = std::real(trace_of_product(rho, kron(strategy.povm_a[i], strategy.povm_b[j])));
            if (v < -1e-12) {
                std::ostringstream os;
                os.precision(12);
                os << "Born probability P(" << i << "," << j << ") = " << v << " is negative";
                throw DomainError(os.str());
            }
            joint(i, j) = std::max(v, 0.0);
        }
    }
    double total = joint.sum();
    if (std::abs(total - 1.0) > 1e-10) {
        throw DomainError("Born probabilities sum to " + std::to_string(total));
    }
    return CoinState::from_matrix(joint / total);
}

double ideal_noisy_payoff(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("p must lie in [0, 1]");
    }
    return (2.0 + p) / 18.0;
}

QuantumStrategy classical_embedding(const CoinState &coin, const StochasticMap &s_a, const StochasticMap &s_b) {
    if (s_a.from_dim() != coin.d_a() || s_b.from_dim() != coin.d_b()) {
        throw DomainError("stochastic map input dimensions do not match the coin");
    }
    const int da = coin.d_a();
    const int db = coin.d_b();
    ComplexMatrix rho = ComplexMatrix::Zero(da * db, da * db);
    for (int k = 0; k < da * db; ++k) {
        rho(k, k) = coin.probs()(k);
    }
    auto diagonal_povm = [](const StochasticMap &s) {
        std::vector<ComplexMatrix> elems;
        for (int k = 0; k < s.to_dim(); ++k) {
            ComplexMatrix e = ComplexMatrix::Zero(s.from_dim(), s.from_dim());
            for (int i = 0; i < s.from_dim(); ++i) {
                e(i, i) = s.entries()(k, i);
            }
            elems.push_back(std::move(e));
        }
        return Povm::from_elements(std::move(elems));
    };
    return {DensityOperator::from_matrix(rho), diagonal_povm(s_a), diagonal_povm(s_b)};
}

QuantumStrategy symmetric_strategy(const DensityOperator &state, const Povm &povm) {
    QuantumStrategy s{state, povm, povm};
    s.check();
    return s;
}

QuantumStrategy to_lab_frame(const QuantumStrategy &singlet_frame) {
    singlet_frame.check();
    if (singlet_frame.povm_a.dim() != 2) {
        throw DomainError("lab frame conversion is defined for qubit strategies");
    }
    const ComplexMatrix &sz = pauli()[2];
    return {apply_local_unitary(singlet_frame.state, sz, Side::A), pauli_conjugate(singlet_frame.povm_a, 2),
            singlet_frame.povm_b};
}

QuantumStrategy lab_strategy(const DensityOperator &lab_state, const Povm &povm) {
    QuantumStrategy s{lab_state, pauli_conjugate(povm, 2), povm};
    s.check();
    return s;
}

}  // namespace qcoin
