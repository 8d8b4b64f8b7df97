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

// Dense two-phase simplex method for the tiny linear programs that arise when
// the classical game objective is maximized over one block of variables with
// the others held fixed.

#include <Eigen/Dense>

namespace qcoin::detail {

struct LpResult {
    bool optimal = false;
    Eigen::VectorXd x;
    double value = 0.0;
};

/// maximize c.x  subject to  A_ub x <= b_ub,  A_eq x = b_eq,  x >= 0.
LpResult solve_lp(const Eigen::VectorXd &c, const Eigen::MatrixXd &a_ub, const Eigen::VectorXd &b_ub,
                  const Eigen::MatrixXd &a_eq, const Eigen::VectorXd &b_eq);

}  // namespace qcoin::detail
