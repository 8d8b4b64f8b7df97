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

// Classical two-party coins: joint distributions over d_a x d_b outcomes and the
// local stochastic maps that act on them. Joint outcome (i, j) lives at flat
// index i * d_b + j everywhere in this library.

#include <optional>

#include "qcoin/errors.hpp"
#include "qcoin/linalg.hpp"

namespace qcoin {

inline constexpr double kCoinTol = 1e-10;

class CoinState {
  public:
    /// Validates nonnegativity and unit sum at `tol`.
    static CoinState from_probs(int d_a, int d_b, const RealVector &probs, double tol = kCoinTol);
    /// Same, from a d_a x d_b matrix of joint probabilities.
    static CoinState from_matrix(const RealMatrix &joint, double tol = kCoinTol);

    int d_a() const noexcept {
        return d_a_;
    }
    int d_b() const noexcept {
        return d_b_;
    }
    const RealVector &probs() const noexcept {
        return probs_;
    }
    double operator()(int i, int j) const {
        return probs_(i * d_b_ + j);
    }
    /// Joint distribution as a d_a x d_b matrix (row i = Alice outcome).
    RealMatrix joint() const;
    RealVector marginal_a() const;
    RealVector marginal_b() const;

  private:
    CoinState(int d_a, int d_b, RealVector p) : d_a_(d_a), d_b_(d_b), probs_(std::move(p)) {
    }
    int d_a_;
    int d_b_;
    RealVector probs_;
};

/// Column-stochastic matrix mapping a k-outcome coin face to d outcomes
/// (d rows, k columns).
class StochasticMap {
  public:
    static StochasticMap from_matrix(const RealMatrix &entries, double tol = kCoinTol);
    static StochasticMap identity(int k);

    int from_dim() const noexcept {
        return static_cast<int>(entries_.cols());
    }
    int to_dim() const noexcept {
        return static_cast<int>(entries_.rows());
    }
    const RealMatrix &entries() const noexcept {
        return entries_;
    }

  private:
    explicit StochasticMap(RealMatrix e) : entries_(std::move(e)) {
    }
    RealMatrix entries_;
};

/// `second` after `first`.
StochasticMap compose(const StochasticMap &second, const StochasticMap &first);

enum class CoinKind {
    ac3,                    // zero diagonal, off-diagonals 1/6
    ac4,                    // zero diagonal, off-diagonals 1/12
    uniform,                // all 1/d^2
    perfectly_correlated_2  // (1/2, 0, 0, 1/2)
};

CoinState canonical_coin(CoinKind kind, std::optional<int> d = std::nullopt);

/// Perfectly anti-correlated coin on n x n: zero diagonal, 1/(n^2 - n) elsewhere.
CoinState anticorrelated_coin(int n);

/// (S_A x S_B) applied to the joint distribution.
CoinState apply_free_operation(const CoinState &coin, const StochasticMap &s_a, const StochasticMap &s_b);

/// Payoff of the n-restaurant game: the smallest off-diagonal joint probability.
double game_payoff(const CoinState &coin, int n);

/// I(X:Y) in bits; entries below 1e-15 count as exact zeros.
double mutual_information(const CoinState &coin);

/// True iff every diagonal entry is <= tol and every off-diagonal entry is > tol.
bool is_star_anticorrelated(const CoinState &coin, double tol);

/// The canonical optimal classical strategy for the three-restaurant game from a
/// shared two-faced coin: coin (1/2, 0, 0, 1/2) with the maps below yields
/// (0,1,1,1,0,1,1,1,2)/8 and payoff 1/8.
struct ClassicalStrategy {
    CoinState coin;
    StochasticMap s_a;
    StochasticMap s_b;
};
ClassicalStrategy optimal_two_coin_strategy_g3();

}  // namespace qcoin
