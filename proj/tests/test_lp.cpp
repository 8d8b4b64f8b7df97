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

#include "doctest.h"
#include "lp.hpp"

using qcoin::detail::solve_lp;
using Eigen::MatrixXd;
using Eigen::VectorXd;

TEST_CASE("textbook maximum") {
    // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 -> (2, 6), value 36.
    VectorXd c(2);
    c << 3, 5;
    MatrixXd a(3, 2);
    a << 1, 0, 0, 2, 3, 2;
    VectorXd b(3);
    b << 4, 12, 18;
    auto r = solve_lp(c, a, b, MatrixXd(0, 2), VectorXd(0));
    REQUIRE(r.optimal);
    CHECK(r.value == doctest::Approx(36.0));
    CHECK(r.x(0) == doctest::Approx(2.0));
    CHECK(r.x(1) == doctest::Approx(6.0));
}

TEST_CASE("equality rows and negative right-hand sides") {
    // max x + y, x + y + z = 1, -x <= -0.25 (x >= 0.25), y <= 0.5.
    VectorXd c(3);
    c << 1, 1, 0;
    MatrixXd a(2, 3);
    a << -1, 0, 0, 0, 1, 0;
    VectorXd b(2);
    b << -0.25, 0.5;
    MatrixXd e(1, 3);
    e << 1, 1, 1;
    VectorXd be(1);
    be << 1;
    auto r = solve_lp(c, a, b, e, be);
    REQUIRE(r.optimal);
    CHECK(r.value == doctest::Approx(1.0));
    CHECK(r.x(0) >= 0.25 - 1e-12);
    CHECK(r.x(1) <= 0.5 + 1e-12);
    CHECK(r.x(2) == doctest::Approx(0.0));
}

TEST_CASE("infeasible and unbounded") {
    VectorXd c(1);
    c << 1;
    MatrixXd a(2, 1);
    a << 1, -1;
    VectorXd b(2);
    b << 1, -2;  // x <= 1 and x >= 2
    CHECK_FALSE(solve_lp(c, a, b, MatrixXd(0, 1), VectorXd(0)).optimal);

    MatrixXd none(0, 1);
    CHECK_FALSE(solve_lp(c, none, VectorXd(0), none, VectorXd(0)).optimal);
}

TEST_CASE("degenerate vertex") {
    // Several constraints tight at the optimum; Bland's rule must terminate.
    VectorXd c(2);
    c << 1, 1;
    MatrixXd a(4, 2);
    a << 1, 0, 0, 1, 1, 1, 2, 1;
    VectorXd b(4);
    b << 1, 1, 2, 3;
    auto r = solve_lp(c, a, b, MatrixXd(0, 2), VectorXd(0));
    REQUIRE(r.optimal);
    CHECK(r.value == doctest::Approx(2.0));
}
