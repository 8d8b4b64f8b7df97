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

#include "qcoin/coin.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace qcoin {

namespace {

std::string num(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

double entropy_bits(const RealVector &p) {
    double h = 0.0;
    for (double x : p) {
        if (x > 1e-15) {
            h -= x * std::log2(x);
        }
    }
    return h;
}

}  // namespace

CoinState CoinState::from_probs(int d_a, int d_b, const RealVector &probs, double tol) {
    if (d_a < 1 || d_b < 1) {
        throw ValidationError(Violation::dimension, "coin dimensions must be positive");
    }
    if (probs.size() != static_cast<Eigen::Index>(d_a) * d_b) {
        throw ValidationError(Violation::dimension, "expected " + std::to_string(d_a * d_b) + " probabilities, got " +
                                                        std::to_string(probs.size()));
    }
    for (Eigen::Index k = 0; k < probs.size(); ++k) {
        if (!(probs(k) >= -tol)) {
            throw ValidationError(Violation::negativity, "entry " + std::to_string(k) + " is " + num(probs(k)));
        }
    }
    double total = probs.sum();
    if (std::abs(total - 1.0) > tol) {
        throw ValidationError(Violation::normalization, "probabilities sum to " + num(total));
    }
    return CoinState(d_a, d_b, probs.cwiseMax(0.0));
}

CoinState CoinState::from_matrix(const RealMatrix &joint, double tol) {
    RealVector flat(joint.size());
    for (Eigen::Index i = 0; i < joint.rows(); ++i) {
        for (Eigen::Index j = 0; j < joint.cols(); ++j) {
            flat(i * joint.cols() + j) = joint(i, j);
        }
    }
    return from_probs(static_cast<int>(joint.rows()), static_cast<int>(joint.cols()), flat, tol);
}

RealMatrix CoinState::joint() const {
    RealMatrix m(d_a_, d_b_);
    for (int i = 0; i < d_a_; ++i) {
        for (int j = 0; j < d_b_; ++j) {
            m(i, j) = (*this)(i, j);
        }
    }
    return m;
}

RealVector CoinState::marginal_a() const {
    return joint().rowwise().sum();
}

RealVector CoinState::marginal_b() const {
    return joint().colwise().sum().transpose();
}

StochasticMap StochasticMap::from_matrix(const RealMatrix &entries, double tol) {
    if (entries.rows() < 1 || entries.cols() < 1) {
        throw ValidationError(Violation::dimension, "stochastic map must be non-empty");
    }
    if ((entries.array() < -tol).any()) {
        throw ValidationError(Violation::negativity, "stochastic map has a negative entry");
    }
    for (Eigen::Index c = 0; c < entries.cols(); ++c) {
        double s = entries.col(c).sum();
        if (std::abs(s - 1.0) > tol) {
            throw ValidationError(Violation::stochasticity,
                                  "column " + std::to_string(c) + " sums to " + num(s));
        }
    }
    return StochasticMap(entries.cwiseMax(0.0));
}

StochasticMap StochasticMap::identity(int k) {
    return StochasticMap(RealMatrix::Identity(k, k));
}

StochasticMap compose(const StochasticMap &second, const StochasticMap &first) {
    if (second.from_dim() != first.to_dim()) {
        throw DomainError("cannot compose stochastic maps: " + std::to_string(first.to_dim()) + " outputs feed " +
                          std::to_string(second.from_dim()) + " inputs");
    }
    return StochasticMap::from_matrix(second.entries() * first.entries());
}

CoinState anticorrelated_coin(int n) {
    if (n < 2) {
        throw DomainError("n must be >= 2, got " + std::to_string(n));
    }
    RealMatrix m = RealMatrix::Constant(n, n, 1.0 / (n * n - n));
    m.diagonal().setZero();
    return CoinState::from_matrix(m);
}

CoinState canonical_coin(CoinKind kind, std::optional<int> d) {
    switch (kind) {
        case CoinKind::ac3:
            return anticorrelated_coin(3);
        case CoinKind::ac4:
            return anticorrelated_coin(4);
        case CoinKind::uniform: {
            if (!d || *d < 2) {
                throw DomainError("uniform coin needs d >= 2");
            }
            return CoinState::from_matrix(RealMatrix::Constant(*d, *d, 1.0 / (*d * *d)));
        }
        case CoinKind::perfectly_correlated_2: {
            RealVector p(4);
            p << 0.5, 0.0, 0.0, 0.5;
            return CoinState::from_probs(2, 2, p);
        }
    }
    throw DomainError("unknown coin kind");
}

CoinState apply_free_operation(const CoinState &coin, const StochasticMap &s_a, const StochasticMap &s_b) {
    if (s_a.from_dim() != coin.d_a() || s_b.from_dim() != coin.d_b()) {
        throw DomainError("stochastic map input dimensions (" + std::to_string(s_a.from_dim()) + ", " +
                          std::to_string(s_b.from_dim()) + ") do not match coin (" + std::to_string(coin.d_a()) +
                          ", " + std::to_string(coin.d_b()) + ")");
    }
    // S_A J S_B^T is the joint-matrix form of (S_A x S_B) vec(J).
    RealMatrix out = s_a.entries() * coin.joint() * s_b.entries().transpose();
    return CoinState::from_matrix(out);
}

double game_payoff(const CoinState &coin, int n) {
    if (coin.d_a() != coin.d_b()) {
        throw DomainError("game payoff needs a square coin");
    }
    if (coin.d_a() != n) {
        throw DomainError("coin has " + std::to_string(coin.d_a()) + " outcomes per side, game has n = " +
                          std::to_string(n));
    }
    if (n < 2) {
        throw DomainError("n must be >= 2");
    }
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j) {
                best = std::min(best, coin(i, j));
            }
        }
    }
    return best;
}

double mutual_information(const CoinState &coin) {
    return entropy_bits(coin.marginal_a()) + entropy_bits(coin.marginal_b()) - entropy_bits(coin.probs());
}

bool is_star_anticorrelated(const CoinState &coin, double tol) {
    if (coin.d_a() != coin.d_b()) {
        return false;
    }
    for (int i = 0; i < coin.d_a(); ++i) {
        for (int j = 0; j < coin.d_b(); ++j) {
            double v = coin(i, j);
            if (i == j ? v > tol : v <= tol) {
                return false;
            }
        }
    }
    return true;
}

ClassicalStrategy optimal_two_coin_strategy_g3() {
    RealMatrix a(3, 2), b(3, 2);
    a << 0.0, 0.5,
         0.5, 0.0,
         0.5, 0.5;
    b << 0.5, 0.0,
         0.0, 0.5,
         0.5, 0.5;
    return {canonical_coin(CoinKind::perfectly_correlated_2), StochasticMap::from_matrix(a),
            StochasticMap::from_matrix(b)};
}

}  // namespace qcoin
