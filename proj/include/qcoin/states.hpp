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

#include <optional>

#include "qcoin/errors.hpp"
#include "qcoin/linalg.hpp"

namespace qcoin {

/// Default tolerance for density-operator and POVM invariants.
inline constexpr double kOperatorTol = 1e-10;

enum class Side { A, B };

/// Unit vector in C^dim.
class PureState {
  public:
    /// Throws ValidationError if the norm is off by more than 1e-12.
    explicit PureState(ComplexVector amplitudes);

    Eigen::Index dim() const noexcept {
        return amplitudes_.size();
    }
    const ComplexVector &amplitudes() const noexcept {
        return amplitudes_;
    }
    ComplexMatrix projector() const {
        return amplitudes_ * amplitudes_.adjoint();
    }

  private:
    ComplexVector amplitudes_;
};

/// Trace-one positive semidefinite matrix. Immutable once constructed.
class DensityOperator {
  public:
    /// Validates hermiticity, unit trace and positivity at `tol`, then stores the
    /// Hermitian part of `m`.
    static DensityOperator from_matrix(const ComplexMatrix &m, double tol = kOperatorTol);
    static DensityOperator from_pure(const PureState &psi);

    Eigen::Index dim() const noexcept {
        return matrix_.rows();
    }
    const ComplexMatrix &matrix() const noexcept {
        return matrix_;
    }

  private:
    explicit DensityOperator(ComplexMatrix m) : matrix_(std::move(m)) {
    }
    ComplexMatrix matrix_;
};

/// Throws ValidationError naming the first violated density-operator invariant.
void check_density_matrix(const ComplexMatrix &m, double tol);

enum class StateKind {
    singlet,   // |psi-> = (|01> - |10>)/sqrt2
    psi_plus,  // |psi+> = (|01> + |10>)/sqrt2, the state a down-conversion source emits
    phi_plus,  // (|00> + |11>)/sqrt2
    werner,    // p |psi-><psi-| + (1-p) I/4
    phi_plus_d // (1/sqrt d) sum_i |ii>
};

struct StateParams {
    double p = 1.0;
    int d = 2;
};

DensityOperator canonical_state(StateKind kind, const StateParams &params = {});

PureState singlet_vector();
PureState psi_plus_vector();
PureState phi_plus_vector(int d);

inline DensityOperator werner_state(double p) {
    return canonical_state(StateKind::werner, {.p = p});
}

/// Kronecker product, A is the left (most significant) factor.
inline ComplexMatrix tensor_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    return kron(a, b);
}

/// One-sided depolarizing channel on a two-qubit state:
/// (1+3p)/4 rho + (1-p)/4 sum_k (s_k x I) rho (s_k x I), mirrored for side B.
DensityOperator apply_depolarizing_one_side(const DensityOperator &rho, double p, Side side);

/// (U x I) rho (U x I)^dagger or (I x U) rho (I x U)^dagger on C^2 x C^2 style splits.
DensityOperator apply_local_unitary(const DensityOperator &rho, const ComplexMatrix &u, Side side);

struct StateMetrics {
    double purity = 0.0;
    std::optional<double> fidelity;
};

/// Purity Tr(rho^2) and, given a pure reference, fidelity <psi|rho|psi>.
StateMetrics state_metrics(const DensityOperator &rho, const std::optional<PureState> &reference = std::nullopt);

}  // namespace qcoin
