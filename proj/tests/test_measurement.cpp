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

#include <algorithm>
#include <numbers>

#include "doctest.h"
#include "qcoin/measurement.hpp"
#include "support.hpp"

using namespace qcoin;

namespace {

const ComplexMatrix I2 = ComplexMatrix::Identity(2, 2);

ComplexMatrix element_sum(const Povm &povm) {
    ComplexMatrix s = ComplexMatrix::Zero(povm.dim(), povm.dim());
    for (const auto &e : povm.elements()) {
        s += e;
    }
    return s;
}

double max_povm_diff(const Povm &a, const Povm &b) {
    REQUIRE(a.size() == b.size());
    double worst = 0.0;
    for (int i = 0; i < a.size(); ++i) {
        worst = std::max(worst, max_abs_diff(a[i], b[i]));
    }
    return worst;
}

ComplexMatrix projector_along(const BlochVector &n, double sign) {
    return bloch_operator(0.5, 0.5 * sign * n);
}

}  // namespace

TEST_CASE("trine") {
    const Povm trine = canonical_povm(PovmKind::trine);
    REQUIRE(trine.size() == 3);
    for (const auto &e : trine.elements()) {
        CHECK(std::abs(real_trace(e) - 2.0 / 3.0) < 1e-15);
        CHECK(min_eigenvalue(e) > -1e-15);
    }
    CHECK(max_abs_diff(element_sum(trine), I2) < 1e-14);
    for (int i = 0; i < 3; ++i) {
        const double t = 2.0 * std::numbers::pi * i / 3.0;
        BlochVector v = bloch_components(trine[i]).second;
        CHECK((v - BlochVector(std::sin(t), 0.0, std::cos(t)) / 3.0).norm() < 1e-15);
    }
}

TEST_CASE("tetrahedral SIC") {
    const Povm sic = canonical_povm(PovmKind::tetra_sic);
    REQUIRE(sic.size() == 4);
    CHECK(max_abs_diff(element_sum(sic), I2) < 1e-14);
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            BlochVector a = bloch_components(sic[i]).second.normalized();
            BlochVector b = bloch_components(sic[j]).second.normalized();
            CHECK(std::abs(a.dot(b) + 1.0 / 3.0) < 1e-14);
        }
    }
}

TEST_CASE("qutrit Weyl-Heisenberg SIC") {
    const Povm sic = canonical_povm(PovmKind::wh_sic_d3);
    REQUIRE(sic.size() == 9);
    REQUIRE(sic.dim() == 3);
    CHECK(max_abs_diff(element_sum(sic), ComplexMatrix::Identity(3, 3)) < 1e-12);
    for (int i = 0; i < 9; ++i) {
        CHECK(std::abs(real_trace(sic[i]) - 1.0 / 3.0) < 1e-12);
        for (int j = 0; j < 9; ++j) {
            if (i != j) {
                // For e = |psi><psi|/3: Tr(e_i e_j) = |<psi_i|psi_j>|^2 / 9.
                double overlap = 9.0 * std::real(trace_of_product(sic[i], sic[j]));
                CHECK(std::abs(overlap - 0.25) < 1e-10);
            }
        }
    }
}

TEST_CASE("unsharp and projective") {
    const Povm u = canonical_povm(PovmKind::unsharp, {.lambda = 0.5});
    ComplexMatrix d0 = ComplexMatrix::Zero(2, 2);
    d0.diagonal() << 0.75, 0.25;
    ComplexMatrix d1 = ComplexMatrix::Zero(2, 2);
    d1.diagonal() << 0.25, 0.75;
    CHECK(max_abs_diff(u[0], d0) < 1e-15);
    CHECK(max_abs_diff(u[1], d1) < 1e-15);

    const Povm p = canonical_povm(PovmKind::projective, {.axis = BlochVector(1, 0, 0)});
    CHECK(max_abs_diff(p[0] * p[0], p[0]) < 1e-15);

    CHECK_THROWS_AS(canonical_povm(PovmKind::unsharp, {.lambda = 0.0}), DomainError);
    CHECK_THROWS_AS(canonical_povm(PovmKind::unsharp, {.lambda = 1.0}), DomainError);
    CHECK_THROWS_AS(canonical_povm(PovmKind::projective, {.axis = BlochVector(1, 1, 0)}), DomainError);
}

TEST_CASE("canonical POVMs satisfy the invariants") {
    for (auto kind : {PovmKind::trine, PovmKind::tetra_sic, PovmKind::wh_sic_d3, PovmKind::unsharp,
                      PovmKind::projective}) {
        const Povm povm = canonical_povm(kind);
        CHECK(max_abs_diff(element_sum(povm), ComplexMatrix::Identity(povm.dim(), povm.dim())) <= 1e-10);
        for (const auto &e : povm.elements()) {
            CHECK(min_eigenvalue(e) >= -1e-10);
        }
    }
}

TEST_CASE("POVM validation names the violated invariant") {
    std::vector<ComplexMatrix> short_sum = canonical_povm(PovmKind::trine).elements();
    for (auto &e : short_sum) {
        e *= 0.9;
    }
    try {
        Povm::from_elements(short_sum);
        FAIL("accepted elements summing to 0.9 I");
    } catch (const ValidationError &e) {
        CHECK(e.kind() == Violation::completeness);
    }
    ComplexMatrix neg = ComplexMatrix::Zero(2, 2);
    neg(0, 0) = 1.2;
    neg(1, 1) = -0.2;
    ComplexMatrix rest = I2 - neg;
    try {
        Povm::from_elements({neg, rest});
        FAIL("accepted a negative element");
    } catch (const ValidationError &e) {
        CHECK(e.kind() == Violation::positivity);
    }
    ComplexMatrix h = 0.5 * I2;
    h(0, 1) = 0.1;
    try {
        Povm::from_elements({h, I2 - h});
        FAIL("accepted a non-Hermitian element");
    } catch (const ValidationError &e) {
        CHECK(e.kind() == Violation::hermiticity);
    }
    CHECK_THROWS_AS(Povm::from_elements({I2, ComplexMatrix::Zero(3, 3)}), ValidationError);
    CHECK_THROWS_AS(Povm::from_elements({}), ValidationError);
}

TEST_CASE("pauli conjugation") {
    const Povm trine = canonical_povm(PovmKind::trine);
    const Povm z = pauli_conjugate(trine, 2);
    CHECK(max_abs_diff(z[0], trine[0]) < 1e-15);
    for (int i = 1; i < 3; ++i) {
        BlochVector a = bloch_components(trine[i]).second;
        BlochVector b = bloch_components(z[i]).second;
        CHECK(std::abs(b.x() + a.x()) < 1e-15);
        CHECK(std::abs(b.z() - a.z()) < 1e-15);
    }
    for (int k = 0; k < 3; ++k) {
        CHECK(max_povm_diff(pauli_conjugate(pauli_conjugate(trine, k), k), trine) < 1e-14);
    }
    const Povm pz = canonical_povm(PovmKind::projective);
    CHECK(max_povm_diff(pauli_conjugate(pz, 2), pz) < 1e-15);
    CHECK_THROWS_AS(pauli_conjugate(canonical_povm(PovmKind::wh_sic_d3), 0), DomainError);
    CHECK_THROWS_AS(pauli_conjugate(trine, 3), DomainError);
}

TEST_CASE("noisy time-averaged POVM") {
    const Povm trine = canonical_povm(PovmKind::trine);
    CHECK(max_povm_diff(noisy_time_averaged_povm(trine, 1.0), trine) < 1e-15);
    const Povm flat = noisy_time_averaged_povm(trine, 0.0);
    for (const auto &e : flat.elements()) {
        CHECK(max_abs_diff(e, I2 / 3.0) < 1e-15);
    }
    // Shrinks Bloch vectors by p.
    const Povm half = noisy_time_averaged_povm(trine, 0.5);
    for (int i = 0; i < 3; ++i) {
        auto [c, v] = bloch_components(half[i]);
        auto [c0, v0] = bloch_components(trine[i]);
        CHECK(std::abs(c - c0) < 1e-15);
        CHECK((v - 0.5 * v0).norm() < 1e-15);
    }
    CHECK_THROWS_AS(noisy_time_averaged_povm(trine, 1.01), DomainError);
    CHECK_THROWS_AS(noisy_time_averaged_povm(trine, -0.01), DomainError);
}

TEST_CASE("permutation and conjugation helpers") {
    const Povm trine = canonical_povm(PovmKind::trine);
    const Povm perm = permute_outcomes(trine, {2, 0, 1});
    CHECK(max_abs_diff(perm[0], trine[2]) == 0.0);
    CHECK_THROWS_AS(permute_outcomes(trine, {0, 0, 1}), DomainError);
    const Povm same = conjugate_povm(trine, I2);
    CHECK(max_povm_diff(same, trine) < 1e-15);
}

TEST_CASE("simplex projection") {
    RealVector v(3);
    v << 0.2, 0.3, 0.5;
    CHECK((project_to_simplex(v) - v).norm() < 1e-15);
    v << 2.0, 0.0, 0.0;
    CHECK(project_to_simplex(v)(0) == doctest::Approx(1.0));
    v << -1.0, 0.5, 0.5;
    RealVector p = project_to_simplex(v);
    CHECK(p(0) == 0.0);
    CHECK(p.sum() == doctest::Approx(1.0));
}

TEST_CASE("projective simulability: simulable inputs") {
    for (double lambda : {0.1, 0.5, 0.9}) {
        const Povm u = canonical_povm(PovmKind::unsharp, {.lambda = lambda});
        SimulabilityReport r = projective_simulability(u);
        CHECK(r.simulable);
        CHECK(r.residual <= 1e-6);
        REQUIRE(r.witness_basis);
        REQUIRE(r.post_processing);
        CHECK(std::abs(std::abs(r.witness_basis->z()) - 1.0) < 1e-6);
        // Post-processing entries are (1 +- lambda)/2.
        const RealMatrix &pp = r.post_processing->entries();
        CHECK(std::abs(pp.maxCoeff() - (1 + lambda) / 2) < 1e-6);
        CHECK(std::abs(pp.minCoeff() - (1 - lambda) / 2) < 1e-6);
        // Reconstruction within 10 tol.
        for (int i = 0; i < u.size(); ++i) {
            ComplexMatrix rec = pp(i, 0) * projector_along(*r.witness_basis, 1.0) +
                                pp(i, 1) * projector_along(*r.witness_basis, -1.0);
            CHECK(max_abs_diff(rec, u[i]) <= 1e-5);
        }
    }
    SimulabilityReport pz = projective_simulability(canonical_povm(PovmKind::projective));
    CHECK(pz.simulable);
    CHECK(pz.residual < 1e-12);

    // Coarse-grained projective measurement with three outcomes along a tilted axis.
    BlochVector n = BlochVector(1.0, 2.0, -0.5).normalized();
    std::vector<ComplexMatrix> coarse{0.5 * projector_along(n, 1.0), 0.5 * projector_along(n, 1.0),
                                      projector_along(n, -1.0)};
    CHECK(projective_simulability(Povm::from_elements(coarse)).simulable);

    // The trivial measurement is covered by equal post-processing columns.
    CHECK(projective_simulability(Povm::from_elements({0.3 * I2, 0.7 * I2})).simulable);
}

TEST_CASE("projective simulability: trine is not simulable") {
    SimulabilityReport r = projective_simulability(canonical_povm(PovmKind::trine));
    CHECK_FALSE(r.simulable);
    CHECK(r.residual >= 10 * kSimulabilityTol);
    CHECK_FALSE(r.witness_basis.has_value());
    MESSAGE("trine simulability residual: " << r.residual);
    CHECK(projective_simulability(canonical_povm(PovmKind::tetra_sic)).residual >= 10 * kSimulabilityTol);
    CHECK_THROWS_AS(projective_simulability(canonical_povm(PovmKind::wh_sic_d3)), DomainError);
}

TEST_CASE("simulability residual is invariant under relabeling and unitary conjugation") {
    std::mt19937_64 rng(2024);
    const Povm trine = canonical_povm(PovmKind::trine);
    const double base = projective_simulability(trine).residual;
    CHECK(std::abs(projective_simulability(permute_outcomes(trine, {1, 2, 0})).residual - base) <= 1e-8);
    CHECK(std::abs(projective_simulability(permute_outcomes(trine, {2, 1, 0})).residual - base) <= 1e-8);

    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const ComplexMatrix u = testing::random_unitary(rng, 2);
        worst = std::max(worst, std::abs(projective_simulability(conjugate_povm(trine, u)).residual - base));
    }
    CHECK(worst <= 1e-8);

    const Povm unsharp = canonical_povm(PovmKind::unsharp, {.lambda = 0.3});
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix u = testing::random_unitary(rng, 2);
        CHECK(projective_simulability(conjugate_povm(unsharp, u)).simulable);
    }
}
