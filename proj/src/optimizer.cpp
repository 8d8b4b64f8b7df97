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

#include "qcoin/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

#include "lp.hpp"
#include "qcoin/nelder_mead.hpp"
#include "qcoin/random.hpp"

namespace qcoin {

namespace {

constexpr double kInfeasible = 1e6;

std::mt19937_64 restart_rng(std::uint64_t seed, int restart) {
    return std::mt19937_64(derive_seed(seed, {static_cast<std::uint64_t>(restart)}));
}

RealVector gaussian_vector(std::mt19937_64 &rng, Eigen::Index n) {
    std::normal_distribution<double> normal(0.0, 1.0);
    RealVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        v(i) = normal(rng);
    }
    return v;
}

struct RestartOutcome {
    double value = 0.0;
    std::vector<double> argument;
    bool converged = false;
};

/// Runs every restart (possibly on several threads) and reduces
/// deterministically: best value wins, ties go to the lowest index.
SearchResult run_restarts(const SearchConfig &cfg, bool maximize,
                          const std::function<RestartOutcome(int, std::mt19937_64 &)> &restart) {
    cfg.check();
    std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(cfg.restarts));
    int workers = cfg.threads > 0 ? cfg.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    workers = std::min(workers, cfg.restarts);
    std::atomic<int> next{0};
    auto work = [&] {
        for (int r = next++; r < cfg.restarts; r = next++) {
            auto rng = restart_rng(cfg.seed, r);
            outcomes[static_cast<std::size_t>(r)] = restart(r, rng);
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
        for (auto &t : pool) {
            t.join();
        }
    }

    SearchResult res;
    res.seed = cfg.seed;
    std::size_t best = 0;
    for (std::size_t r = 0; r < outcomes.size(); ++r) {
        res.per_restart_values.push_back(outcomes[r].value);
        bool better = maximize ? outcomes[r].value > outcomes[best].value : outcomes[r].value < outcomes[best].value;
        if (better) {
            best = r;
        }
    }
    res.value = outcomes[best].value;
    res.argument = outcomes[best].argument;
    res.converged = outcomes[best].converged;
    return res;
}

NelderMeadOptions local_options(const SearchConfig &cfg, double step = 0.5) {
    NelderMeadOptions opt;
    opt.max_evaluations = cfg.max_iterations;
    opt.f_tol = cfg.convergence_tol;
    opt.x_tol = 1e-12;
    opt.initial_step = step;
    return opt;
}

double min_off_diagonal(const RealMatrix &q) {
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < q.rows(); ++i) {
        for (Eigen::Index j = 0; j < q.cols(); ++j) {
            if (i != j) {
                best = std::min(best, q(i, j));
            }
        }
    }
    return best;
}

/// Column-wise squared-magnitude map of a raw (rows x cols) block.
RealMatrix stochastic_columns(const double *raw, int rows, int cols) {
    RealMatrix s(rows, cols);
    for (int c = 0; c < cols; ++c) {
        s.col(c) = squared_magnitude_simplex(Eigen::Map<const RealVector>(raw + c * rows, rows));
    }
    return s;
}

// ---------------------------------------------------------------------------
// Classical strategies in natural coordinates.

struct ClassicalPoint {
    RealMatrix joint;  // m x m
    RealMatrix s_a;    // n x m
    RealMatrix s_b;    // n x m

    RealMatrix outcome() const {
        return s_a * joint * s_b.transpose();
    }

    std::vector<double> flatten() const {
        std::vector<double> out;
        for (Eigen::Index i = 0; i < joint.rows(); ++i) {
            for (Eigen::Index j = 0; j < joint.cols(); ++j) {
                out.push_back(joint(i, j));
            }
        }
        out.insert(out.end(), s_a.data(), s_a.data() + s_a.size());
        out.insert(out.end(), s_b.data(), s_b.data() + s_b.size());
        return out;
    }
};

ClassicalPoint classical_from_raw(int m, int n, const RealVector &raw) {
    ClassicalPoint p;
    RealVector coin = squared_magnitude_simplex(raw.head(m * m));
    p.joint = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(coin.data(), m, m);
    p.s_a = stochastic_columns(raw.data() + m * m, n, m);
    p.s_b = stochastic_columns(raw.data() + m * m + n * m, n, m);
    return p;
}

ClassicalPoint classical_from_argument(int m, int n, const std::vector<double> &arg) {
    if (arg.size() != static_cast<std::size_t>(m * m + 2 * n * m)) {
        throw DomainError("argument length does not match (m, n)");
    }
    ClassicalPoint p;
    p.joint = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(arg.data(), m, m);
    p.s_a = Eigen::Map<const RealMatrix>(arg.data() + m * m, n, m);
    p.s_b = Eigen::Map<const RealMatrix>(arg.data() + m * m + n * m, n, m);
    return p;
}

/// Maximizes min over off-diagonal rows of (coeffs x) over a product of
/// simplices, where `groups[g]` lists the variables that sum to one.
/// Returns nullopt-like empty vector on LP failure.
std::vector<double> maximize_min_linear(const RealMatrix &coeffs, const std::vector<std::vector<int>> &groups) {
    const int k = static_cast<int>(coeffs.cols());
    const int rows = static_cast<int>(coeffs.rows());
    RealVector c = RealVector::Zero(k + 1);
    c(k) = 1.0;
    RealMatrix a_ub(rows, k + 1);
    a_ub.leftCols(k) = -coeffs;
    a_ub.col(k).setOnes();
    RealVector b_ub = RealVector::Zero(rows);
    RealMatrix a_eq = RealMatrix::Zero(static_cast<Eigen::Index>(groups.size()), k + 1);
    for (std::size_t g = 0; g < groups.size(); ++g) {
        for (int v : groups[g]) {
            a_eq(static_cast<Eigen::Index>(g), v) = 1.0;
        }
    }
    RealVector b_eq = RealVector::Ones(static_cast<Eigen::Index>(groups.size()));
    auto lp = detail::solve_lp(c, a_ub, b_ub, a_eq, b_eq);
    if (!lp.optimal) {
        return {};
    }
    std::vector<double> x(lp.x.data(), lp.x.data() + k);
    return x;
}

std::vector<std::vector<int>> column_groups(int rows, int cols) {
    std::vector<std::vector<int>> groups(static_cast<std::size_t>(cols));
    for (int c = 0; c < cols; ++c) {
        for (int r = 0; r < rows; ++r) {
            groups[static_cast<std::size_t>(c)].push_back(c * rows + r);
        }
    }
    return groups;
}

/// Improves s_a (n x k) by exact LP with q_ij = sum_a s_a(i, a) m(a, j) fixed m (k x n).
void polish_left_map(RealMatrix &s_a, const RealMatrix &m) {
    const int n = static_cast<int>(s_a.rows());
    const int k = static_cast<int>(s_a.cols());
    RealMatrix coeffs = RealMatrix::Zero(n * n - n, n * k);
    int row = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            for (int a = 0; a < k; ++a) {
                coeffs(row, a * n + i) = m(a, j);
            }
            ++row;
        }
    }
    auto x = maximize_min_linear(coeffs, column_groups(n, k));
    if (!x.empty()) {
        s_a = Eigen::Map<const RealMatrix>(x.data(), n, k);
    }
}

/// Same for the right map: q_ij = sum_b m(i, b) s_b(j, b), m is n x k.
void polish_right_map(RealMatrix &s_b, const RealMatrix &m) {
    const int n = static_cast<int>(s_b.rows());
    const int k = static_cast<int>(s_b.cols());
    RealMatrix coeffs = RealMatrix::Zero(n * n - n, n * k);
    int row = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            for (int b = 0; b < k; ++b) {
                coeffs(row, b * n + j) = m(i, b);
            }
            ++row;
        }
    }
    auto x = maximize_min_linear(coeffs, column_groups(n, k));
    if (!x.empty()) {
        s_b = Eigen::Map<const RealMatrix>(x.data(), n, k);
    }
}

void polish_joint(ClassicalPoint &p) {
    const int m = static_cast<int>(p.joint.rows());
    const int n = static_cast<int>(p.s_a.rows());
    RealMatrix coeffs = RealMatrix::Zero(n * n - n, m * m);
    int row = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            for (int a = 0; a < m; ++a) {
                for (int b = 0; b < m; ++b) {
                    coeffs(row, a * m + b) = p.s_a(i, a) * p.s_b(j, b);
                }
            }
            ++row;
        }
    }
    std::vector<int> all(static_cast<std::size_t>(m * m));
    std::iota(all.begin(), all.end(), 0);
    auto x = maximize_min_linear(coeffs, {all});
    if (!x.empty()) {
        p.joint = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(x.data(), m, m);
    }
}

/// Block-coordinate ascent with an exact LP per block; never accepts a step
/// that lowers the payoff.
void seesaw_classical(ClassicalPoint &p, double tol) {
    double current = min_off_diagonal(p.outcome());
    for (int round = 0; round < 200; ++round) {
        const double start = current;
        for (int block = 0; block < 3; ++block) {
            ClassicalPoint trial = p;
            if (block == 0) {
                polish_joint(trial);
            } else if (block == 1) {
                polish_left_map(trial.s_a, trial.joint * trial.s_b.transpose());
            } else {
                polish_right_map(trial.s_b, trial.s_a * trial.joint);
            }
            double v = min_off_diagonal(trial.outcome());
            if (v > current) {
                p = std::move(trial);
                current = v;
            }
        }
        if (current - start <= tol) {
            break;
        }
    }
}

/// Joint outcome Q = S_A J S_B^T (row-major flattened) and its Jacobian with
/// respect to the flattened point (joint first when `joint_varies`, then S_A,
/// then S_B, matching ClassicalPoint::flatten).
struct OutcomeModel {
    RealVector q;
    RealMatrix jacobian;
};

OutcomeModel outcome_model(const ClassicalPoint &p, bool joint_varies) {
    const int m = static_cast<int>(p.joint.rows());
    const int n = static_cast<int>(p.s_a.rows());
    const int joint_vars = joint_varies ? m * m : 0;
    const int a0 = joint_vars;
    const int b0 = joint_vars + n * m;
    RealMatrix right = p.joint * p.s_b.transpose();  // m x n
    RealMatrix left = p.s_a * p.joint;               // n x m
    RealMatrix q = p.s_a * right;
    OutcomeModel out;
    out.q.resize(n * n);
    out.jacobian = RealMatrix::Zero(n * n, joint_vars + 2 * n * m);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int r = i * n + j;
            out.q(r) = q(i, j);
            if (joint_varies) {
                for (int a = 0; a < m; ++a) {
                    for (int b = 0; b < m; ++b) {
                        out.jacobian(r, a * m + b) = p.s_a(i, a) * p.s_b(j, b);
                    }
                }
            }
            for (int a = 0; a < m; ++a) {
                out.jacobian(r, a0 + a * n + i) = right(a, j);
            }
            for (int b = 0; b < m; ++b) {
                out.jacobian(r, b0 + b * n + j) = left(i, b);
            }
        }
    }
    return out;
}

/// Values whose minimum is being maximized, with their Jacobian.
struct MinModel {
    RealVector values;
    RealMatrix jacobian;
};

/// Sequential linear programming with a box trust region for
/// maximize min_r f_r(x) over a product of probability simplices (`groups`
/// partitions the coordinates). Each step solves the linearized max-min exactly,
/// so it moves all blocks at once and lands on vertex optima exactly.
struct SlpResult {
    RealVector x;
    bool converged = false;
};

SlpResult slp_maximize_min(RealVector x, const std::vector<std::vector<int>> &groups,
                           const std::function<MinModel(const RealVector &)> &model, double tol, int max_steps = 400) {
    bool converged = false;
    const int nv = static_cast<int>(x.size());
    double radius = 0.25;
    MinModel current = model(x);
    double value = current.values.minCoeff();
    for (int step = 0; step < max_steps && radius > 1e-13; ++step) {
        const RealMatrix &g = current.jacobian;
        const int rows = static_cast<int>(g.rows());
        RealVector lo = (x.array() - radius).cwiseMax(0.0);
        RealVector hi = (x.array() + radius).cwiseMin(1.0);
        // Unknowns: z = y - lo (nv entries) and s = t - floor, both >= 0.
        const double floor = value - 1.0;
        RealVector c = RealVector::Zero(nv + 1);
        c(nv) = 1.0;
        RealMatrix a_ub = RealMatrix::Zero(rows + nv, nv + 1);
        RealVector b_ub(rows + nv);
        a_ub.topLeftCorner(rows, nv) = -g;
        a_ub.block(0, nv, rows, 1).setOnes();
        b_ub.head(rows) = current.values - g * x + g * lo - RealVector::Constant(rows, floor);
        a_ub.bottomLeftCorner(nv, nv).setIdentity();
        b_ub.tail(nv) = hi - lo;
        RealMatrix a_eq = RealMatrix::Zero(static_cast<Eigen::Index>(groups.size()), nv + 1);
        RealVector b_eq(static_cast<Eigen::Index>(groups.size()));
        for (std::size_t k = 0; k < groups.size(); ++k) {
            double lo_sum = 0.0;
            for (int v : groups[k]) {
                a_eq(static_cast<Eigen::Index>(k), v) = 1.0;
                lo_sum += lo(v);
            }
            b_eq(static_cast<Eigen::Index>(k)) = 1.0 - lo_sum;
        }
        auto lp = detail::solve_lp(c, a_ub, b_ub, a_eq, b_eq);
        if (!lp.optimal) {
            radius *= 0.25;
            continue;
        }
        const double predicted = lp.x(nv) + floor - value;
        if (predicted <= tol) {
            converged = true;
            break;
        }
        RealVector y = lo + lp.x.head(nv);
        for (const auto &grp : groups) {
            double total = 0.0;
            for (int v : grp) {
                y(v) = std::max(0.0, y(v));
                total += y(v);
            }
            for (int v : grp) {
                y(v) /= total;
            }
        }
        MinModel trial = model(y);
        const double actual = trial.values.minCoeff() - value;
        if (actual > 0.0 && actual >= 0.1 * predicted) {
            x = std::move(y);
            current = std::move(trial);
            value += actual;
            if (actual >= 0.75 * predicted) {
                radius = std::min(1.0, 2.0 * radius);
            }
        } else {
            radius *= 0.25;
        }
    }
    return {std::move(x), converged || radius <= 1e-13};
}

std::vector<std::vector<int>> classical_groups(int m, int n, bool joint_varies) {
    std::vector<std::vector<int>> groups;
    int offset = 0;
    if (joint_varies) {
        groups.emplace_back(static_cast<std::size_t>(m * m));
        std::iota(groups.back().begin(), groups.back().end(), 0);
        offset = m * m;
    }
    for (int col = 0; col < 2 * m; ++col) {
        std::vector<int> grp(static_cast<std::size_t>(n));
        std::iota(grp.begin(), grp.end(), offset + col * n);
        groups.push_back(std::move(grp));
    }
    return groups;
}

RealVector flatten_maps(const RealMatrix &s_a, const RealMatrix &s_b) {
    RealVector v(s_a.size() + s_b.size());
    v.head(s_a.size()) = Eigen::Map<const RealVector>(s_a.data(), s_a.size());
    v.tail(s_b.size()) = Eigen::Map<const RealVector>(s_b.data(), s_b.size());
    return v;
}

/// Off-diagonal rows of an outcome model.
MinModel off_diagonal_rows(const OutcomeModel &om, int n) {
    MinModel mm;
    mm.values.resize(n * n - n);
    mm.jacobian.resize(n * n - n, om.jacobian.cols());
    int row = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j) {
                mm.values(row) = om.q(i * n + j);
                mm.jacobian.row(row) = om.jacobian.row(i * n + j);
                ++row;
            }
        }
    }
    return mm;
}

/// Polishes a classical strategy for the game payoff: trust-region SLP over all
/// blocks, then exact per-block LPs. Returns whether the SLP reached stationarity.
bool polish_classical(ClassicalPoint &p, double tol) {
    const int m = static_cast<int>(p.joint.rows());
    const int n = static_cast<int>(p.s_a.rows());
    auto unflatten = [m, n](const RealVector &v) {
        std::vector<double> arg(v.data(), v.data() + v.size());
        return classical_from_argument(m, n, arg);
    };
    std::vector<double> flat = p.flatten();
    RealVector x = Eigen::Map<const RealVector>(flat.data(), static_cast<Eigen::Index>(flat.size()));
    auto slp = slp_maximize_min(
        x, classical_groups(m, n, true),
        [&](const RealVector &v) { return off_diagonal_rows(outcome_model(unflatten(v), true), n); }, tol);
    ClassicalPoint polished = unflatten(slp.x);
    if (min_off_diagonal(polished.outcome()) >= min_off_diagonal(p.outcome())) {
        p = std::move(polished);
    }
    seesaw_classical(p, tol);
    return slp.converged;
}

/// Drives a classical strategy towards `goal` in the max-norm by SLP; returns
/// the polished point (the caller decides whether to keep it).
ClassicalPoint polish_towards(const ClassicalPoint &p, const RealMatrix &goal, double tol) {
    const int m = static_cast<int>(p.joint.rows());
    const int n = static_cast<int>(p.s_a.rows());
    auto unflatten = [m, n](const RealVector &v) {
        std::vector<double> arg(v.data(), v.data() + v.size());
        return classical_from_argument(m, n, arg);
    };
    RealVector target(n * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            target(i * n + j) = goal(i, j);
        }
    }
    auto model = [&](const RealVector &v) {
        OutcomeModel om = outcome_model(unflatten(v), true);
        // min(-e, e) = -|e| per entry, with e = q - target.
        MinModel mm;
        mm.values.resize(2 * n * n);
        mm.jacobian.resize(2 * n * n, om.jacobian.cols());
        mm.values.head(n * n) = om.q - target;
        mm.values.tail(n * n) = target - om.q;
        mm.jacobian.topRows(n * n) = om.jacobian;
        mm.jacobian.bottomRows(n * n) = -om.jacobian;
        return mm;
    };
    std::vector<double> flat = p.flatten();
    RealVector x = Eigen::Map<const RealVector>(flat.data(), static_cast<Eigen::Index>(flat.size()));
    return unflatten(slp_maximize_min(x, classical_groups(m, n, true), model, tol).x);
}

// ---------------------------------------------------------------------------
// Two-qubit states and projective measurements.

constexpr int kStateParams = 16;

ComplexMatrix state_from_raw(const double *raw) {
    ComplexMatrix l = ComplexMatrix::Zero(4, 4);
    for (int i = 0; i < 4; ++i) {
        l(i, i) = raw[i];
    }
    int k = 4;
    for (int i = 1; i < 4; ++i) {
        for (int j = 0; j < i; ++j) {
            l(i, j) = cplx(raw[k], raw[k + 1]);
            k += 2;
        }
    }
    ComplexMatrix rho = l * l.adjoint();
    double tr = std::real(rho.trace());
    if (!(tr > 1e-300)) {
        return ComplexMatrix::Identity(4, 4) / 4.0;
    }
    return rho / tr;
}

BlochVector direction_from_raw(const double *raw) {
    BlochVector v(raw[0], raw[1], raw[2]);
    double norm = v.norm();
    if (norm < 1e-300) {
        return BlochVector::UnitZ();
    }
    return v / norm;
}

/// 2x2 joint distribution of two projective qubit measurements on rho.
RealMatrix projective_coin(const ComplexMatrix &rho, const BlochVector &na, const BlochVector &nb) {
    RealMatrix c(2, 2);
    for (int a = 0; a < 2; ++a) {
        ComplexMatrix pa = bloch_operator(0.5, (a == 0 ? 0.5 : -0.5) * na);
        for (int b = 0; b < 2; ++b) {
            ComplexMatrix pb = bloch_operator(0.5, (b == 0 ? 0.5 : -0.5) * nb);
            c(a, b) = std::max(0.0, std::real(trace_of_product(rho, kron(pa, pb))));
        }
    }
    return c;
}

struct ProjectivePoint {
    ComplexMatrix rho;
    BlochVector dir_a;
    BlochVector dir_b;
    RealMatrix s_a;  // n x 2
    RealMatrix s_b;  // n x 2
};

ProjectivePoint projective_from_argument(int n, const double *arg, bool raw_maps) {
    ProjectivePoint p;
    p.rho = state_from_raw(arg);
    p.dir_a = direction_from_raw(arg + kStateParams);
    p.dir_b = direction_from_raw(arg + kStateParams + 3);
    const double *maps = arg + kStateParams + 6;
    if (raw_maps) {
        p.s_a = stochastic_columns(maps, n, 2);
        p.s_b = stochastic_columns(maps + 2 * n, n, 2);
    } else {
        p.s_a = Eigen::Map<const RealMatrix>(maps, n, 2);
        p.s_b = Eigen::Map<const RealMatrix>(maps + 2 * n, n, 2);
    }
    return p;
}

double projective_payoff(const ProjectivePoint &p) {
    RealMatrix c = projective_coin(p.rho, p.dir_a, p.dir_b);
    return min_off_diagonal(p.s_a * c * p.s_b.transpose());
}

// ---------------------------------------------------------------------------
// Rank-one POVM parameterization for the diagonal-mass search.

/// Returns false when the operator sum is singular.
bool povm_from_raw(int d, int n, const double *raw, std::vector<ComplexMatrix> &out) {
    const int block = 1 + 2 * d;
    std::vector<ComplexMatrix> parts;
    ComplexMatrix total = ComplexMatrix::Zero(d, d);
    for (int k = 0; k < n; ++k) {
        const double *b = raw + k * block;
        ComplexVector v(d);
        for (int i = 0; i < d; ++i) {
            v(i) = cplx(b[1 + i], b[1 + d + i]);
        }
        double norm = v.norm();
        if (norm < 1e-12) {
            parts.push_back(ComplexMatrix::Zero(d, d));
            continue;
        }
        v /= norm;
        ComplexMatrix a = b[0] * b[0] * (v * v.adjoint());
        total += a;
        parts.push_back(std::move(a));
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(total);
    if (solver.eigenvalues().minCoeff() < 1e-10 * std::max(1.0, solver.eigenvalues().maxCoeff())) {
        return false;
    }
    ComplexMatrix inv_sqrt = solver.operatorInverseSqrt();
    out.clear();
    for (const auto &a : parts) {
        out.push_back(inv_sqrt * a * inv_sqrt);
    }
    return true;
}

/// sum_i Tr[(e_i x f_i) phi+_d] = (1/d) sum_i Tr(e_i f_i^T).
double diagonal_mass(int d, const std::vector<ComplexMatrix> &a, const std::vector<ComplexMatrix> &b) {
    double total = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        total += std::real(trace_of_product(a[i], b[i].transpose()));
    }
    return total / d;
}

}  // namespace

void SearchConfig::check() const {
    if (restarts < 1) {
        throw DomainError("restarts must be >= 1");
    }
    if (max_iterations < 1) {
        throw DomainError("max_iterations must be >= 1");
    }
    if (!(convergence_tol > 0.0)) {
        throw DomainError("convergence_tol must be positive");
    }
}

RealVector squared_magnitude_simplex(const RealVector &raw) {
    RealVector sq = raw.array().square();
    double total = sq.sum();
    if (!(total > 0.0)) {
        return RealVector::Constant(raw.size(), 1.0 / static_cast<double>(raw.size()));
    }
    return sq / total;
}

// ---------------------------------------------------------------------------

ClassicalStrategy unpack_classical_argument(int m, int n, const std::vector<double> &argument) {
    auto p = classical_from_argument(m, n, argument);
    return {CoinState::from_matrix(p.joint, 1e-9), StochasticMap::from_matrix(p.s_a, 1e-9),
            StochasticMap::from_matrix(p.s_b, 1e-9)};
}

double evaluate_classical_argument(int m, int n, const std::vector<double> &argument) {
    return min_off_diagonal(classical_from_argument(m, n, argument).outcome());
}

SearchResult max_classical_payoff(int m, int n, const SearchConfig &cfg) {
    if (m < 2 || n < 2) {
        throw DomainError("m and n must be >= 2");
    }
    if (m > n) {
        throw DomainError("m must not exceed n (m = " + std::to_string(m) + ", n = " + std::to_string(n) + ")");
    }
    const int dim = m * m + 2 * n * m;
    const auto opt = local_options(cfg);
    return run_restarts(cfg, true, [&](int, std::mt19937_64 &rng) {
        RealVector start = gaussian_vector(rng, dim);
        auto objective = [&](const RealVector &x) { return -min_off_diagonal(classical_from_raw(m, n, x).outcome()); };
        auto local = nelder_mead<double>(objective, start, opt);
        ClassicalPoint p = classical_from_raw(m, n, local.x);
        RestartOutcome out;
        out.converged = polish_classical(p, cfg.convergence_tol);
        out.argument = p.flatten();
        out.value = evaluate_classical_argument(m, n, out.argument);
        return out;
    });
}

// ---------------------------------------------------------------------------

double evaluate_projective_simulable_argument(int n, const std::vector<double> &argument) {
    if (argument.size() != static_cast<std::size_t>(kStateParams + 6 + 4 * n)) {
        throw DomainError("argument length does not match n");
    }
    return projective_payoff(projective_from_argument(n, argument.data(), false));
}

QuantumStrategy unpack_projective_simulable_argument(int n, const std::vector<double> &argument) {
    if (argument.size() != static_cast<std::size_t>(kStateParams + 6 + 4 * n)) {
        throw DomainError("argument length does not match n");
    }
    auto p = projective_from_argument(n, argument.data(), false);
    auto post_processed = [n](const BlochVector &dir, const RealMatrix &s) {
        ComplexMatrix plus = bloch_operator(0.5, 0.5 * dir);
        ComplexMatrix minus = bloch_operator(0.5, -0.5 * dir);
        std::vector<ComplexMatrix> elems;
        for (int i = 0; i < n; ++i) {
            elems.push_back(s(i, 0) * plus + s(i, 1) * minus);
        }
        return Povm::from_elements(std::move(elems), 1e-9);
    };
    return {DensityOperator::from_matrix(p.rho, 1e-9), post_processed(p.dir_a, p.s_a), post_processed(p.dir_b, p.s_b)};
}

SearchResult max_projective_simulable_payoff(int n, const SearchConfig &cfg) {
    if (n < 3) {
        throw DomainError("n must be >= 3");
    }
    const int dim = kStateParams + 6 + 4 * n;
    const auto opt = local_options(cfg);
    return run_restarts(cfg, true, [&](int, std::mt19937_64 &rng) {
        RealVector start = gaussian_vector(rng, dim);
        auto objective = [&](const RealVector &x) { return -projective_payoff(projective_from_argument(n, x.data(), true)); };
        auto local = nelder_mead<double>(objective, start, opt);
        ProjectivePoint p = projective_from_argument(n, local.x.data(), true);

        // The measured 2x2 coin is fixed by (rho, directions); polish the maps.
        ClassicalPoint cp{projective_coin(p.rho, p.dir_a, p.dir_b), p.s_a, p.s_b};
        auto maps_of = [n, &cp](const RealVector &v) {
            ClassicalPoint q = cp;
            q.s_a = Eigen::Map<const RealMatrix>(v.data(), n, 2);
            q.s_b = Eigen::Map<const RealMatrix>(v.data() + 2 * n, n, 2);
            return q;
        };
        auto slp = slp_maximize_min(
            flatten_maps(p.s_a, p.s_b), classical_groups(2, n, false),
            [&](const RealVector &v) { return off_diagonal_rows(outcome_model(maps_of(v), false), n); },
            cfg.convergence_tol);
        ClassicalPoint polished = maps_of(slp.x);
        if (min_off_diagonal(polished.outcome()) > min_off_diagonal(cp.outcome())) {
            p.s_a = polished.s_a;
            p.s_b = polished.s_b;
        }

        RestartOutcome out;
        out.argument.assign(local.x.data(), local.x.data() + kStateParams + 6);
        out.argument.insert(out.argument.end(), p.s_a.data(), p.s_a.data() + p.s_a.size());
        out.argument.insert(out.argument.end(), p.s_b.data(), p.s_b.data() + p.s_b.size());
        out.value = evaluate_projective_simulable_argument(n, out.argument);
        out.converged = slp.converged;
        return out;
    });
}

// ---------------------------------------------------------------------------

double evaluate_feasibility_argument(const CoinState &target, int m, const std::vector<double> &argument) {
    const int d = target.d_a();
    RealMatrix q = classical_from_argument(m, d, argument).outcome();
    return (q - target.joint()).norm();
}

SearchResult coin_feasibility_distance(const CoinState &target, int m, const SearchConfig &cfg) {
    if (target.d_a() != target.d_b()) {
        throw DomainError("target coin must be square");
    }
    const int d = target.d_a();
    if (m < 1 || m > d) {
        throw DomainError("need 1 <= m <= d");
    }
    const RealMatrix goal = target.joint();
    const int dim = m * m + 2 * d * m;
    const auto opt = local_options(cfg);
    return run_restarts(cfg, false, [&](int, std::mt19937_64 &rng) {
        RealVector start = gaussian_vector(rng, dim);
        auto objective = [&](const RealVector &x) {
            return (classical_from_raw(m, d, x).outcome() - goal).squaredNorm();
        };
        auto local = nelder_mead<double>(objective, start, opt);
        ClassicalPoint p = classical_from_raw(m, d, local.x);
        ClassicalPoint polished = polish_towards(p, goal, cfg.convergence_tol);
        if ((polished.outcome() - goal).norm() < (p.outcome() - goal).norm()) {
            p = std::move(polished);
        }
        RestartOutcome out;
        out.argument = p.flatten();
        out.value = evaluate_feasibility_argument(target, m, out.argument);
        out.converged = local.converged;
        return out;
    });
}

// ---------------------------------------------------------------------------

std::pair<Povm, Povm> unpack_diagonal_mass_argument(int d_local, int n_outcomes, const std::vector<double> &argument) {
    const int side = n_outcomes * (1 + 2 * d_local);
    if (argument.size() != static_cast<std::size_t>(2 * side)) {
        throw DomainError("argument length does not match (d_local, n_outcomes)");
    }
    std::vector<ComplexMatrix> a, b;
    if (!povm_from_raw(d_local, n_outcomes, argument.data(), a) ||
        !povm_from_raw(d_local, n_outcomes, argument.data() + side, b)) {
        throw DomainError("argument encodes a singular operator sum");
    }
    return {Povm::from_elements(std::move(a), 1e-9), Povm::from_elements(std::move(b), 1e-9)};
}

double evaluate_diagonal_mass_argument(int d_local, int n_outcomes, const std::vector<double> &argument) {
    auto [a, b] = unpack_diagonal_mass_argument(d_local, n_outcomes, argument);
    QuantumStrategy s{canonical_state(StateKind::phi_plus_d, {.d = d_local}), a, b};
    CoinState coin = born_coin(s);
    double total = 0.0;
    for (int i = 0; i < n_outcomes; ++i) {
        total += coin(i, i);
    }
    return total;
}

SearchResult min_diagonal_mass(int d_local, int n_outcomes, const SearchConfig &cfg) {
    if (d_local != 2 && d_local != 3) {
        throw DomainError("d_local must be 2 or 3");
    }
    if (n_outcomes < d_local) {
        throw DomainError("n_outcomes must be >= d_local");
    }
    const int side = n_outcomes * (1 + 2 * d_local);
    const auto opt = local_options(cfg, 0.3);
    return run_restarts(cfg, false, [&](int, std::mt19937_64 &rng) {
        RealVector start = gaussian_vector(rng, 2 * side);
        std::vector<ComplexMatrix> a, b;
        auto objective = [&](const RealVector &x) {
            if (!povm_from_raw(d_local, n_outcomes, x.data(), a) || !povm_from_raw(d_local, n_outcomes, x.data() + side, b)) {
                return kInfeasible;
            }
            return diagonal_mass(d_local, a, b);
        };
        auto local = nelder_mead<double>(objective, start, opt);
        RestartOutcome out;
        out.argument.assign(local.x.data(), local.x.data() + local.x.size());
        try {
            out.value = evaluate_diagonal_mass_argument(d_local, n_outcomes, out.argument);
            out.converged = local.converged;
        } catch (const std::exception &) {
            out.value = kInfeasible;
            out.converged = false;
        }
        return out;
    });
}

}  // namespace qcoin
