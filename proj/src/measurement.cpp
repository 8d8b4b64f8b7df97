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

#include "qcoin/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qcoin/nelder_mead.hpp"

namespace qcoin {

namespace {

std::string num(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

Povm from_bloch(const std::vector<BlochVector> &directions, double weight) {
    std::vector<ComplexMatrix> elems;
    elems.reserve(directions.size());
    for (const auto &n : directions) {
        elems.push_back(bloch_operator(weight, weight * n));
    }
    return Povm::from_elements(std::move(elems));
}

void require_qubit(const Povm &povm, const char *what) {
    if (povm.dim() != 2) {
        throw DomainError(std::string(what) + " needs a qubit POVM, got dim " + std::to_string(povm.dim()));
    }
}

BlochVector unit_axis(const BlochVector &axis) {
    double norm = axis.norm();
    if (!(std::abs(norm - 1.0) <= 1e-9)) {
        throw DomainError("axis must be a unit vector, |axis| = " + num(norm));
    }
    return axis;
}

Povm wh_sic_d3() {
    const double pi = std::numbers::pi;
    const cplx omega = std::polar(1.0, 2.0 * pi / 3.0);
    ComplexVector fiducial(3);
    fiducial << 0.0, 1.0, -1.0;
    fiducial /= std::sqrt(2.0);

    std::vector<ComplexVector> kets;
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            ComplexVector v(3);
            for (int j = 0; j < 3; ++j) {
                // X^a Z^b: phase from Z on |j>, then shift j -> j + a.
                v((j + a) % 3) = std::pow(omega, b * j) * fiducial(j);
            }
            kets.push_back(v);
        }
    }
    for (std::size_t i = 0; i < kets.size(); ++i) {
        for (std::size_t j = i + 1; j < kets.size(); ++j) {
            double overlap = std::norm(kets[i].dot(kets[j]));
            if (std::abs(overlap - 0.25) > 1e-8) {
                throw ValidationError(Violation::normalization,
                                      "Weyl-Heisenberg fiducial fails the SIC overlap condition: " + num(overlap));
            }
        }
    }
    std::vector<ComplexMatrix> elems;
    for (const auto &k : kets) {
        elems.push_back(k * k.adjoint() / 3.0);
    }
    return Povm::from_elements(std::move(elems));
}

/// Roughly uniform points on the unit sphere.
std::vector<BlochVector> fibonacci_sphere(int count) {
    std::vector<BlochVector> pts;
    pts.reserve(static_cast<std::size_t>(count));
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < count; ++i) {
        double z = 1.0 - 2.0 * (i + 0.5) / count;
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        double phi = golden * i;
        pts.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
    }
    return pts;
}

}  // namespace

void check_povm_elements(const std::vector<ComplexMatrix> &elements, double tol) {
    if (elements.empty()) {
        throw ValidationError(Violation::dimension, "POVM has no elements");
    }
    const Eigen::Index dim = elements.front().rows();
    ComplexMatrix total = ComplexMatrix::Zero(dim, dim);
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const auto &e = elements[i];
        if (e.rows() != dim || e.cols() != dim || dim == 0) {
            throw ValidationError(Violation::dimension, "element " + std::to_string(i) + " is not " +
                                                            std::to_string(dim) + "x" + std::to_string(dim));
        }
        double herm = hermiticity_defect(e);
        if (herm > tol) {
            throw ValidationError(Violation::hermiticity,
                                  "element " + std::to_string(i) + " has max |E - E^dagger| = " + num(herm));
        }
        double lo = min_eigenvalue(e);
        if (lo < -tol) {
            throw ValidationError(Violation::positivity,
                                  "element " + std::to_string(i) + " has minimum eigenvalue " + num(lo));
        }
        total += e;
    }
    double defect = max_abs_diff(total, ComplexMatrix::Identity(dim, dim));
    if (defect > tol) {
        throw ValidationError(Violation::completeness, "elements sum to identity only within " + num(defect));
    }
}

Povm Povm::from_elements(std::vector<ComplexMatrix> elements, double tol, std::vector<std::string> labels) {
    check_povm_elements(elements, tol);
    if (!labels.empty() && labels.size() != elements.size()) {
        throw ValidationError(Violation::dimension, "label count does not match element count");
    }
    for (auto &e : elements) {
        e = 0.5 * (e + e.adjoint()).eval();
    }
    return Povm(std::move(elements), std::move(labels));
}

Povm canonical_povm(PovmKind kind, const PovmParams &params) {
    const double pi = std::numbers::pi;
    switch (kind) {
        case PovmKind::trine: {
            std::vector<BlochVector> dirs;
            for (double theta : {0.0, 2.0 * pi / 3.0, 4.0 * pi / 3.0}) {
                dirs.emplace_back(std::sin(theta), 0.0, std::cos(theta));
            }
            return from_bloch(dirs, 1.0 / 3.0);
        }
        case PovmKind::tetra_sic: {
            std::vector<BlochVector> dirs = {BlochVector(1, 1, 1), BlochVector(1, -1, -1), BlochVector(-1, 1, -1),
                                             BlochVector(-1, -1, 1)};
            for (auto &d : dirs) {
                d.normalize();
            }
            return from_bloch(dirs, 0.25);
        }
        case PovmKind::wh_sic_d3:
            return wh_sic_d3();
        case PovmKind::unsharp: {
            if (!(params.lambda > 0.0 && params.lambda < 1.0)) {
                throw DomainError("lambda must lie in (0, 1), got " + num(params.lambda));
            }
            BlochVector n = unit_axis(params.axis);
            return from_bloch({params.lambda * n, -params.lambda * n}, 0.5);
        }
        case PovmKind::projective: {
            BlochVector n = unit_axis(params.axis);
            return from_bloch({n, -n}, 0.5);
        }
    }
    throw DomainError("unknown POVM kind");
}

Povm pauli_conjugate(const Povm &povm, int k) {
    require_qubit(povm, "pauli_conjugate");
    if (k < 0 || k > 2) {
        throw DomainError("Pauli index must be 0 (x), 1 (y) or 2 (z), got " + std::to_string(k));
    }
    return conjugate_povm(povm, pauli()[static_cast<std::size_t>(k)]);
}

Povm conjugate_povm(const Povm &povm, const ComplexMatrix &u) {
    std::vector<ComplexMatrix> out;
    out.reserve(povm.elements().size());
    for (const auto &e : povm.elements()) {
        out.push_back(u * e * u.adjoint());
    }
    return Povm::from_elements(std::move(out), kOperatorTol, povm.labels());
}

Povm permute_outcomes(const Povm &povm, const std::vector<int> &order) {
    if (static_cast<int>(order.size()) != povm.size()) {
        throw DomainError("permutation length does not match outcome count");
    }
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < povm.size(); ++i) {
        if (sorted[static_cast<std::size_t>(i)] != i) {
            throw DomainError("order is not a permutation of the outcomes");
        }
    }
    std::vector<ComplexMatrix> out;
    for (int i : order) {
        out.push_back(povm[i]);
    }
    return Povm::from_elements(std::move(out));
}

Povm noisy_time_averaged_povm(const Povm &povm, double p) {
    require_qubit(povm, "noisy_time_averaged_povm");
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("p must lie in [0, 1], got " + num(p));
    }
    std::vector<ComplexMatrix> out;
    for (const auto &e : povm.elements()) {
        ComplexMatrix m = (1.0 + 3.0 * p) / 4.0 * e;
        for (const auto &s : pauli()) {
            m += (1.0 - p) / 4.0 * (s * e * s);
        }
        out.push_back(std::move(m));
    }
    return Povm::from_elements(std::move(out), kOperatorTol, povm.labels());
}

RealVector project_to_simplex(const RealVector &v) {
    const Eigen::Index n = v.size();
    std::vector<double> u(v.data(), v.data() + n);
    std::sort(u.begin(), u.end(), std::greater<>());
    double cumulative = 0.0;
    double theta = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) {
        cumulative += u[static_cast<std::size_t>(k)];
        double t = (cumulative - 1.0) / static_cast<double>(k + 1);
        if (u[static_cast<std::size_t>(k)] - t > 0.0) {
            theta = t;
        }
    }
    return (v.array() - theta).cwiseMax(0.0);
}

double simulability_residual(const Povm &povm, const BlochVector &direction, RealMatrix *post_processing) {
    require_qubit(povm, "simulability_residual");
    const BlochVector n = direction.normalized();
    const int k = povm.size();
    // With e_i = c_i I + v_i.s and s_i = v_i.n the Frobenius objective is
    //   sum_i (c_i + s_i - P_i0)^2 + (c_i - s_i - P_i1)^2 + 2 |v_i - s_i n|^2,
    // so each column of P is an independent simplex projection.
    RealVector plus(k), minus(k);
    double perpendicular = 0.0;
    for (int i = 0; i < k; ++i) {
        auto [c, v] = bloch_components(povm[i]);
        double s = v.dot(n);
        plus(i) = c + s;
        minus(i) = c - s;
        perpendicular += 2.0 * (v - s * n).squaredNorm();
    }
    RealVector p0 = project_to_simplex(plus);
    RealVector p1 = project_to_simplex(minus);
    if (post_processing) {
        post_processing->resize(k, 2);
        post_processing->col(0) = p0;
        post_processing->col(1) = p1;
    }
    double sq = (plus - p0).squaredNorm() + (minus - p1).squaredNorm() + perpendicular;
    return std::sqrt(std::max(0.0, sq));
}

SimulabilityReport projective_simulability(const Povm &povm, double tol) {
    require_qubit(povm, "projective_simulability");
    if (!(tol > 0.0)) {
        throw DomainError("tolerance must be positive");
    }

    // Seeds: a dense sphere grid plus the element Bloch directions, which are
    // exact hits whenever the POVM is a coarse-graining along one axis.
    std::vector<BlochVector> seeds = fibonacci_sphere(20000);
    for (const auto &e : povm.elements()) {
        BlochVector v = bloch_components(e).second;
        if (v.norm() > 1e-12) {
            seeds.push_back(v.normalized());
        }
    }
    for (int axis = 0; axis < 3; ++axis) {
        seeds.push_back(BlochVector::Unit(axis));
    }

    std::vector<double> values(seeds.size());
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        values[i] = simulability_residual(povm, seeds[i]);
    }
    std::vector<std::size_t> order(seeds.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    BlochVector best_dir = seeds[order.front()];
    double best = values[order.front()];
    const std::size_t refine = std::min<std::size_t>(8, order.size());
    NelderMeadOptions opt;
    opt.initial_step = 0.02;
    opt.max_evaluations = 4000;
    opt.f_tol = 1e-30;
    opt.x_tol = 1e-13;
    for (std::size_t r = 0; r < refine; ++r) {
        // Refine the squared residual, which is smooth at a zero.
        auto objective = [&](const RealVector &x) {
            double norm = x.norm();
            if (norm < 1e-9) {
                return 1e9;
            }
            double res = simulability_residual(povm, BlochVector(x / norm));
            return res * res;
        };
        RealVector start = seeds[order[r]];
        auto result = nelder_mead<double>(objective, start, opt);
        BlochVector dir = BlochVector(result.x).normalized();
        double value = simulability_residual(povm, dir);
        if (value < best) {
            best = value;
            best_dir = dir;
        }
    }

    SimulabilityReport report;
    RealMatrix post;
    report.residual = simulability_residual(povm, best_dir, &post);
    report.best_direction = best_dir;
    report.simulable = report.residual <= tol;
    if (report.simulable) {
        report.witness_basis = best_dir;
        report.post_processing = StochasticMap::from_matrix(post, 1e-9);
    }
    return report;
}

}  // namespace qcoin
