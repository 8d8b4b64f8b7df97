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

#include "qcoin/states.hpp"

#include <cmath>
#include <sstream>

namespace qcoin {

namespace {

std::string fmt_value(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

void require_probability(double p, const char *name) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError(std::string(name) + " must lie in [0, 1], got " + fmt_value(p));
    }
}

ComplexVector two_qubit(cplx c00, cplx c01, cplx c10, cplx c11) {
    ComplexVector v(4);
    v << c00, c01, c10, c11;
    return v;
}

}  // namespace

PureState::PureState(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() == 0) {
        throw ValidationError(Violation::dimension, "pure state needs at least one amplitude");
    }
    double norm = amplitudes_.norm();
    if (std::abs(norm - 1.0) > 1e-12) {
        throw ValidationError(Violation::normalization, "state norm is " + fmt_value(norm));
    }
}

void check_density_matrix(const ComplexMatrix &m, double tol) {
    if (m.rows() == 0 || m.rows() != m.cols()) {
        throw ValidationError(Violation::dimension, "density matrix must be square and non-empty");
    }
    double herm = hermiticity_defect(m);
    if (herm > tol) {
        throw ValidationError(Violation::hermiticity, "max |M - M^dagger| = " + fmt_value(herm));
    }
    double tr = real_trace(m);
    if (std::abs(tr - 1.0) > tol) {
        throw ValidationError(Violation::trace, "trace is " + fmt_value(tr));
    }
    double lo = min_eigenvalue(m);
    if (lo < -tol) {
        throw ValidationError(Violation::positivity, "minimum eigenvalue is " + fmt_value(lo));
    }
}

DensityOperator DensityOperator::from_matrix(const ComplexMatrix &m, double tol) {
    check_density_matrix(m, tol);
    ComplexMatrix h = 0.5 * (m + m.adjoint());
    return DensityOperator(std::move(h));
}

DensityOperator DensityOperator::from_pure(const PureState &psi) {
    return DensityOperator(psi.projector());
}

PureState singlet_vector() {
    const double r = 1.0 / std::sqrt(2.0);
    return PureState(two_qubit(0.0, r, -r, 0.0));
}

PureState psi_plus_vector() {
    const double r = 1.0 / std::sqrt(2.0);
    return PureState(two_qubit(0.0, r, r, 0.0));
}

PureState phi_plus_vector(int d) {
    if (d < 2) {
        throw DomainError("d must be >= 2, got " + std::to_string(d));
    }
    ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(d) * d);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (int i = 0; i < d; ++i) {
        v(i * d + i) = amp;
    }
    // Renormalize so the 1e-12 norm check never trips on rounding for large d.
    v /= v.norm();
    return PureState(std::move(v));
}

DensityOperator canonical_state(StateKind kind, const StateParams &params) {
    switch (kind) {
        case StateKind::singlet:
            return DensityOperator::from_pure(singlet_vector());
        case StateKind::psi_plus:
            return DensityOperator::from_pure(psi_plus_vector());
        case StateKind::phi_plus:
            return DensityOperator::from_pure(phi_plus_vector(2));
        case StateKind::phi_plus_d:
            return DensityOperator::from_pure(phi_plus_vector(params.d));
        case StateKind::werner: {
            require_probability(params.p, "p");
            ComplexMatrix m = params.p * singlet_vector().projector() +
                              (1.0 - params.p) * 0.25 * ComplexMatrix::Identity(4, 4);
            return DensityOperator::from_matrix(m);
        }
    }
    throw DomainError("unknown state kind");
}

DensityOperator apply_local_unitary(const DensityOperator &rho, const ComplexMatrix &u, Side side) {
    const Eigen::Index local = u.rows();
    if (u.rows() != u.cols() || local == 0 || rho.dim() % local != 0) {
        throw DomainError("local unitary dimension does not divide the state dimension");
    }
    const Eigen::Index other = rho.dim() / local;
    ComplexMatrix id = ComplexMatrix::Identity(other, other);
    ComplexMatrix full = side == Side::A ? kron(u, id) : kron(id, u);
    return DensityOperator::from_matrix(full * rho.matrix() * full.adjoint());
}

DensityOperator apply_depolarizing_one_side(const DensityOperator &rho, double p, Side side) {
    require_probability(p, "p");
    if (rho.dim() != 4) {
        throw DomainError("one-sided depolarizing expects a two-qubit state, got dim " + std::to_string(rho.dim()));
    }
    const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
    ComplexMatrix out = (1.0 + 3.0 * p) / 4.0 * rho.matrix();
    for (const auto &s : pauli()) {
        ComplexMatrix k = side == Side::A ? kron(s, id2) : kron(id2, s);
        out += (1.0 - p) / 4.0 * (k * rho.matrix() * k);
    }
    return DensityOperator::from_matrix(out);
}

StateMetrics state_metrics(const DensityOperator &rho, const std::optional<PureState> &reference) {
    StateMetrics out;
    out.purity = std::real(trace_of_product(rho.matrix(), rho.matrix()));
    if (reference) {
        if (reference->dim() != rho.dim()) {
            throw DomainError("reference dimension " + std::to_string(reference->dim()) +
                              " does not match state dimension " + std::to_string(rho.dim()));
        }
        const auto &psi = reference->amplitudes();
        out.fidelity = std::real(psi.dot(rho.matrix() * psi));
    }
    return out;
}

}  // namespace qcoin
