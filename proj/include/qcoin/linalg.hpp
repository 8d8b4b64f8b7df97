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

// Small dense linear algebra helpers shared by every module. Matrices here are
// at most 9x9 (two qutrits), so everything is dynamic-size Eigen and eager.

#include <Eigen/Dense>

#include <array>
#include <complex>

namespace qcoin {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using BlochVector = Eigen::Vector3d;

/// Kronecker product with row index i_a * rows(b) + i_b.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> kron(
    const Eigen::MatrixBase<DerivedA> &a, const Eigen::MatrixBase<DerivedB> &b) {
    using Scalar = typename DerivedA::Scalar;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/// Largest absolute entrywise difference; infinity if shapes differ.
template <typename DerivedA, typename DerivedB>
double max_abs_diff(const Eigen::MatrixBase<DerivedA> &a, const Eigen::MatrixBase<DerivedB> &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

template <typename DerivedA, typename DerivedB>
bool approx_equal(const Eigen::MatrixBase<DerivedA> &a, const Eigen::MatrixBase<DerivedB> &b, double tol) {
    return max_abs_diff(a, b) <= tol;
}

template <typename Derived>
double hermiticity_defect(const Eigen::MatrixBase<Derived> &m) {
    return max_abs_diff(m, m.adjoint());
}

/// Smallest eigenvalue of the Hermitian part of m.
template <typename Derived>
double min_eigenvalue(const Eigen::MatrixBase<Derived> &m) {
    ComplexMatrix h = 0.5 * (m + m.adjoint()).template cast<cplx>();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

template <typename Derived>
double real_trace(const Eigen::MatrixBase<Derived> &m) {
    return std::real(m.trace());
}

/// Tr(A B) without forming the product.
template <typename DerivedA, typename DerivedB>
cplx trace_of_product(const Eigen::MatrixBase<DerivedA> &a, const Eigen::MatrixBase<DerivedB> &b) {
    return a.cwiseProduct(b.transpose()).sum();
}

/// Pauli matrices, index 0..2 for x, y, z.
inline const std::array<ComplexMatrix, 3> &pauli() {
    static const std::array<ComplexMatrix, 3> sigma = [] {
        std::array<ComplexMatrix, 3> s;
        s[0] = ComplexMatrix::Zero(2, 2);
        s[0](0, 1) = 1.0;
        s[0](1, 0) = 1.0;
        s[1] = ComplexMatrix::Zero(2, 2);
        s[1](0, 1) = cplx(0.0, -1.0);
        s[1](1, 0) = cplx(0.0, 1.0);
        s[2] = ComplexMatrix::Zero(2, 2);
        s[2](0, 0) = 1.0;
        s[2](1, 1) = -1.0;
        return s;
    }();
    return sigma;
}

/// c0 I + v . sigma on a qubit.
inline ComplexMatrix bloch_operator(double c0, const BlochVector &v) {
    const auto &s = pauli();
    ComplexMatrix out = c0 * ComplexMatrix::Identity(2, 2);
    for (int k = 0; k < 3; ++k) {
        out += v(k) * s[k];
    }
    return out;
}

/// Inverse of bloch_operator for Hermitian 2x2 input: returns (c0, v).
inline std::pair<double, BlochVector> bloch_components(const ComplexMatrix &m) {
    const auto &s = pauli();
    BlochVector v;
    for (int k = 0; k < 3; ++k) {
        v(k) = 0.5 * std::real(trace_of_product(m, s[k]));
    }
    return {0.5 * real_trace(m), v};
}

/// Unit vector from polar angle theta (from +z) and azimuth phi.
inline BlochVector spherical_unit(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

}  // namespace qcoin
