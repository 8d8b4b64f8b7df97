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
#include <string>
#include <vector>

#include "qcoin/coin.hpp"
#include "qcoin/states.hpp"

namespace qcoin {

/// Ordered list of positive semidefinite effects summing to the identity.
class Povm {
  public:
    /// Validates each element (Hermitian, min eigenvalue >= -tol) and completeness
    /// (sum within tol of I per entry). Stores Hermitian parts.
    static Povm from_elements(std::vector<ComplexMatrix> elements, double tol = kOperatorTol,
                              std::vector<std::string> labels = {});

    Eigen::Index dim() const noexcept {
        return elements_.front().rows();
    }
    int size() const noexcept {
        return static_cast<int>(elements_.size());
    }
    const ComplexMatrix &operator[](int i) const {
        return elements_[static_cast<std::size_t>(i)];
    }
    const std::vector<ComplexMatrix> &elements() const noexcept {
        return elements_;
    }
    const std::vector<std::string> &labels() const noexcept {
        return labels_;
    }

  private:
    Povm(std::vector<ComplexMatrix> e, std::vector<std::string> l)
        : elements_(std::move(e)), labels_(std::move(l)) {
    }
    std::vector<ComplexMatrix> elements_;
    std::vector<std::string> labels_;
};

/// Throws ValidationError naming the first violated POVM invariant.
void check_povm_elements(const std::vector<ComplexMatrix> &elements, double tol);

enum class PovmKind { trine, tetra_sic, wh_sic_d3, unsharp, projective };

struct PovmParams {
    BlochVector axis = BlochVector(0.0, 0.0, 1.0);
    double lambda = 0.5;
};

/// trine:      (1/3)(I + n_i.s), n_i = (sin t, 0, cos t), t in {0, 2pi/3, 4pi/3}
/// tetra_sic:  (1/4)(I + n_i.s), n_i along (1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1)
/// wh_sic_d3:  nine rank-one (1/3)|psi_k><psi_k| from the Weyl-Heisenberg orbit
/// unsharp:    (1/2)(I +- lambda n.s)
/// projective: (1/2)(I +- n.s)
Povm canonical_povm(PovmKind kind, const PovmParams &params = {});

/// Each element mapped to s_k e s_k; k = 0, 1, 2 for x, y, z.
Povm pauli_conjugate(const Povm &povm, int k);

/// Measurement-side depolarizing: (1+3p)/4 e + (1-p)/4 sum_k s_k e s_k per element.
Povm noisy_time_averaged_povm(const Povm &povm, double p);

/// U e U^dagger per element.
Povm conjugate_povm(const Povm &povm, const ComplexMatrix &u);

Povm permute_outcomes(const Povm &povm, const std::vector<int> &order);

inline constexpr double kSimulabilityTol = 1e-6;

/// Outcome of the projective-simulability search for a qubit POVM.
///
/// The candidate family is every two-outcome projective measurement {pi_+, pi_-}
/// along a Bloch direction followed by a column-stochastic post-processing P
/// (k rows, 2 columns): e_i ~ P_i0 pi_+ + P_i1 pi_-. The trivial one-outcome
/// measurement (identity) is covered by post-processings with equal columns.
struct SimulabilityReport {
    bool simulable = false;
    /// min over directions and P of sqrt(sum_i ||e_i - P_i0 pi_+ - P_i1 pi_-||_F^2)
    double residual = 0.0;
    /// Best direction found; set only when simulable.
    std::optional<BlochVector> witness_basis;
    std::optional<StochasticMap> post_processing;
    /// Best direction regardless of the decision.
    BlochVector best_direction = BlochVector(0.0, 0.0, 1.0);
};

/// Residual of the best post-processing for a fixed unit direction.
/// The inner problem separates into two Euclidean projections onto the
/// probability simplex, so it is solved exactly.
double simulability_residual(const Povm &povm, const BlochVector &direction, RealMatrix *post_processing = nullptr);

SimulabilityReport projective_simulability(const Povm &povm, double tol = kSimulabilityTol);

/// Euclidean projection of v onto the probability simplex.
RealVector project_to_simplex(const RealVector &v);

}  // namespace qcoin
