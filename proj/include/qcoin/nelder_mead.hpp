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

// Derivative-free local minimization by the Nelder-Mead simplex method with
// dimension-adaptive coefficients, restarted around the incumbent until a
// restart no longer improves it.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace qcoin {

struct NelderMeadOptions {
    int max_evaluations = 20000;
    /// Stop a cycle when max |f_i - f_best| over the simplex drops below this.
    double f_tol = 1e-14;
    /// Stop a cycle when the simplex diameter drops below this.
    double x_tol = 1e-12;
    double initial_step = 0.25;
    /// Number of simplex rebuilds around the incumbent after a cycle converges.
    int max_rebuilds = 6;
};

template <typename Scalar>
struct NelderMeadResult {
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x;
    Scalar value;
    int evaluations = 0;
    bool converged = false;
};

template <typename Scalar, typename Objective>
NelderMeadResult<Scalar> nelder_mead(Objective &&f, const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> &start,
                                     const NelderMeadOptions &opt = {}) {
    using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    const Eigen::Index n = start.size();
    const Scalar dn = static_cast<Scalar>(std::max<Eigen::Index>(n, 2));
    const Scalar alpha = 1;
    const Scalar beta = 1 + 2 / dn;
    const Scalar gamma = Scalar(0.75) - 1 / (2 * dn);
    const Scalar delta = 1 - 1 / dn;

    NelderMeadResult<Scalar> res;
    res.x = start;
    res.value = f(start);
    res.evaluations = 1;
    if (n == 0) {
        res.converged = true;
        return res;
    }

    std::vector<Vec> pts(static_cast<std::size_t>(n + 1));
    std::vector<Scalar> vals(static_cast<std::size_t>(n + 1));
    std::vector<std::size_t> order(static_cast<std::size_t>(n + 1));

    auto eval = [&](const Vec &x) {
        ++res.evaluations;
        return f(x);
    };

    Scalar step = static_cast<Scalar>(opt.initial_step);
    for (int cycle = 0; cycle <= opt.max_rebuilds; ++cycle) {
        pts[0] = res.x;
        vals[0] = res.value;
        for (Eigen::Index i = 0; i < n; ++i) {
            Vec p = res.x;
            p(i) += (p(i) != 0 ? step * std::max<Scalar>(std::abs(p(i)), Scalar(0.1)) : step);
            pts[static_cast<std::size_t>(i + 1)] = p;
            vals[static_cast<std::size_t>(i + 1)] = eval(p);
        }
        const Scalar before = res.value;
        bool cycle_converged = false;
        while (res.evaluations < opt.max_evaluations) {
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
            const std::size_t best = order.front();
            const std::size_t worst = order.back();
            const std::size_t second = order[order.size() - 2];

            Scalar spread = 0;
            Scalar diameter = 0;
            for (std::size_t k = 0; k < pts.size(); ++k) {
                spread = std::max(spread, std::abs(vals[k] - vals[best]));
                diameter = std::max(diameter, (pts[k] - pts[best]).cwiseAbs().maxCoeff());
            }
            if (spread <= opt.f_tol || diameter <= opt.x_tol) {
                cycle_converged = true;
                break;
            }

            Vec centroid = Vec::Zero(n);
            for (std::size_t k = 0; k < pts.size(); ++k) {
                if (k != worst) {
                    centroid += pts[k];
                }
            }
            centroid /= static_cast<Scalar>(n);

            Vec xr = centroid + alpha * (centroid - pts[worst]);
            Scalar fr = eval(xr);
            if (fr < vals[best]) {
                Vec xe = centroid + beta * (xr - centroid);
                Scalar fe = eval(xe);
                if (fe < fr) {
                    pts[worst] = xe;
                    vals[worst] = fe;
                } else {
                    pts[worst] = xr;
                    vals[worst] = fr;
                }
                continue;
            }
            if (fr < vals[second]) {
                pts[worst] = xr;
                vals[worst] = fr;
                continue;
            }
            bool outside = fr < vals[worst];
            Vec xc = outside ? Vec(centroid + gamma * (xr - centroid)) : Vec(centroid - gamma * (centroid - pts[worst]));
            Scalar fc = eval(xc);
            if (fc < (outside ? fr : vals[worst])) {
                pts[worst] = xc;
                vals[worst] = fc;
                continue;
            }
            for (std::size_t k = 0; k < pts.size(); ++k) {
                if (k != best) {
                    pts[k] = pts[best] + delta * (pts[k] - pts[best]);
                    vals[k] = eval(pts[k]);
                }
            }
        }
        std::size_t best = static_cast<std::size_t>(std::min_element(vals.begin(), vals.end()) - vals.begin());
        if (vals[best] < res.value) {
            res.value = vals[best];
            res.x = pts[best];
        }
        res.converged = cycle_converged;
        if (!cycle_converged || res.evaluations >= opt.max_evaluations) {
            break;
        }
        if (before - res.value <= opt.f_tol && cycle > 0) {
            break;
        }
        step = std::max<Scalar>(step * Scalar(0.5), Scalar(1e-3));
    }
    return res;
}

}  // namespace qcoin
