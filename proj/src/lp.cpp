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

#include "lp.hpp"

#include <limits>
#include <vector>

namespace qcoin::detail {

namespace {

constexpr double kPivotEps = 1e-9;
constexpr int kMaxPivots = 20000;

class Tableau {
  public:
    Tableau(int rows, int cols) : t_(Eigen::MatrixXd::Zero(rows + 1, cols + 1)), basis_(static_cast<std::size_t>(rows)) {
    }

    Eigen::MatrixXd &data() {
        return t_;
    }
    int rows() const {
        return static_cast<int>(t_.rows()) - 1;
    }
    int cols() const {
        return static_cast<int>(t_.cols()) - 1;
    }
    std::vector<int> &basis() {
        return basis_;
    }
    double rhs(int r) const {
        return t_(r, cols());
    }

    void pivot(int r, int c) {
        t_.row(r) /= t_(r, c);
        for (int k = 0; k <= rows(); ++k) {
            if (k != r && t_(k, c) != 0.0) {
                t_.row(k) -= t_(k, c) * t_.row(r);
            }
        }
        basis_[static_cast<std::size_t>(r)] = c;
    }

    /// Sets the objective row to -cost and prices out the basic columns.
    void set_objective(const Eigen::VectorXd &cost) {
        const int obj = rows();
        t_.row(obj).setZero();
        t_.row(obj).head(cols()) = -cost.transpose();
        for (int r = 0; r < rows(); ++r) {
            double coef = t_(obj, basis_[static_cast<std::size_t>(r)]);
            if (coef != 0.0) {
                t_.row(obj) -= coef * t_.row(r);
            }
        }
    }

    /// Bland's rule iterations; columns >= allowed_cols never enter.
    bool optimize(int allowed_cols) {
        const int obj = rows();
        for (int iter = 0; iter < kMaxPivots; ++iter) {
            int enter = -1;
            for (int c = 0; c < allowed_cols; ++c) {
                if (t_(obj, c) < -kPivotEps) {
                    enter = c;
                    break;
                }
            }
            if (enter < 0) {
                return true;
            }
            int leave = -1;
            double best_ratio = std::numeric_limits<double>::infinity();
            for (int r = 0; r < rows(); ++r) {
                double a = t_(r, enter);
                if (a > kPivotEps) {
                    double ratio = rhs(r) / a;
                    if (ratio < best_ratio - 1e-14 ||
                        (ratio <= best_ratio + 1e-14 && leave >= 0 &&
                         basis_[static_cast<std::size_t>(r)] < basis_[static_cast<std::size_t>(leave)])) {
                        best_ratio = std::min(best_ratio, ratio);
                        leave = r;
                    }
                }
            }
            if (leave < 0) {
                return false;  // unbounded
            }
            pivot(leave, enter);
        }
        return false;
    }

    double objective_value() const {
        return t_(rows(), cols());
    }

  private:
    Eigen::MatrixXd t_;
    std::vector<int> basis_;
};

}  // namespace

LpResult solve_lp(const Eigen::VectorXd &c, const Eigen::MatrixXd &a_ub, const Eigen::VectorXd &b_ub,
                  const Eigen::MatrixXd &a_eq, const Eigen::VectorXd &b_eq) {
    const int n = static_cast<int>(c.size());
    const int m_ub = static_cast<int>(a_ub.rows());
    const int m_eq = static_cast<int>(a_eq.rows());
    const int slack0 = n;
    // Rows that cannot start with their slack basic get an artificial.
    std::vector<int> needs_artificial;
    for (int r = 0; r < m_ub; ++r) {
        if (b_ub(r) < 0.0) {
            needs_artificial.push_back(r);
        }
    }
    for (int r = 0; r < m_eq; ++r) {
        needs_artificial.push_back(m_ub + r);
    }
    const int art0 = n + m_ub;
    const int n_art = static_cast<int>(needs_artificial.size());
    const int total = art0 + n_art;

    Tableau tab(m_ub + m_eq, total);
    auto &t = tab.data();
    for (int r = 0; r < m_ub; ++r) {
        double sign = b_ub(r) < 0.0 ? -1.0 : 1.0;
        t.row(r).head(n) = sign * a_ub.row(r);
        t(r, slack0 + r) = sign;
        t(r, total) = sign * b_ub(r);
        tab.basis()[static_cast<std::size_t>(r)] = slack0 + r;
    }
    for (int r = 0; r < m_eq; ++r) {
        const int row = m_ub + r;
        double sign = b_eq(r) < 0.0 ? -1.0 : 1.0;
        t.row(row).head(n) = sign * a_eq.row(r);
        t(row, total) = sign * b_eq(r);
    }
    for (int k = 0; k < n_art; ++k) {
        const int row = needs_artificial[static_cast<std::size_t>(k)];
        t(row, art0 + k) = 1.0;
        tab.basis()[static_cast<std::size_t>(row)] = art0 + k;
    }
    const int m_art = n_art;

    LpResult out;
    if (m_art > 0) {
        Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(total);
        phase1.tail(m_art).setConstant(-1.0);
        tab.set_objective(phase1);
        if (!tab.optimize(total)) {
            return out;
        }
        if (tab.objective_value() < -1e-9) {
            return out;  // infeasible
        }
        // Drive zero-level artificials out of the basis where possible.
        for (int r = 0; r < tab.rows(); ++r) {
            if (tab.basis()[static_cast<std::size_t>(r)] >= art0) {
                for (int col = 0; col < art0; ++col) {
                    if (std::abs(t(r, col)) > 1e-9) {
                        tab.pivot(r, col);
                        break;
                    }
                }
            }
        }
    }

    Eigen::VectorXd cost = Eigen::VectorXd::Zero(total);
    cost.head(n) = c;
    tab.set_objective(cost);
    if (!tab.optimize(art0)) {
        return out;
    }
    out.x = Eigen::VectorXd::Zero(n);
    for (int r = 0; r < tab.rows(); ++r) {
        int b = tab.basis()[static_cast<std::size_t>(r)];
        if (b < n) {
            out.x(b) = std::max(0.0, tab.rhs(r));
        }
    }
    out.value = c.dot(out.x);
    // Reject solutions that lost feasibility to round-off in the pivots.
    const double tol = 1e-9;
    bool feasible = true;
    if (m_ub > 0) {
        feasible = feasible && ((a_ub * out.x - b_ub).array() <= tol).all();
    }
    if (m_eq > 0) {
        feasible = feasible && ((a_eq * out.x - b_eq).cwiseAbs().array() <= tol).all();
    }
    out.optimal = feasible;
    return out;
}

}  // namespace qcoin::detail
