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

// Random inputs shared by the property tests.

#include <random>

#include "qcoin/coin.hpp"
#include "qcoin/linalg.hpp"

namespace qcoin::testing {

/// Haar-random unitary via QR of a complex Ginibre matrix.
inline ComplexMatrix random_unitary(std::mt19937_64 &rng, int dim) {
    std::normal_distribution<double> g;
    ComplexMatrix z(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            z(i, j) = cplx(g(rng), g(rng));
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ();
    ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i) {
        q.col(i) *= std::polar(1.0, std::arg(r(i, i)));
    }
    return q;
}

/// Random point of the simplex; with probability 1/4 an entry is forced to zero.
inline RealVector random_simplex_point(std::mt19937_64 &rng, int n) {
    std::exponential_distribution<double> e;
    std::bernoulli_distribution sparse(0.25);
    RealVector v(n);
    for (int i = 0; i < n; ++i) {
        v(i) = sparse(rng) ? 0.0 : e(rng);
    }
    if (v.sum() == 0.0) {
        v(0) = 1.0;
    }
    return v / v.sum();
}

inline CoinState random_coin(std::mt19937_64 &rng, int d_a, int d_b) {
    return CoinState::from_probs(d_a, d_b, random_simplex_point(rng, d_a * d_b));
}

inline StochasticMap random_map(std::mt19937_64 &rng, int to, int from) {
    RealMatrix s(to, from);
    for (int c = 0; c < from; ++c) {
        s.col(c) = random_simplex_point(rng, to);
    }
    return StochasticMap::from_matrix(s);
}

}  // namespace qcoin::testing
