// Copyright 2026 The sqgame authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <memory>
#include <variant>
#include <vector>

#include "sqgame/qop.hpp"
#include "sqgame/states.hpp"

namespace sqgame {

/// Layout of Alice's joint effects: her share of the state first, then her
/// question slot.
SubsystemLayout alice_effect_layout(Index dim_a, Index dim_a0);
/// Layout of Bob's joint effects: his question slot first, then his share.
SubsystemLayout bob_effect_layout(Index dim_b0, Index dim_b);
/// The canonical four-party order [A0, A, B, B0].
const std::vector<std::string>& canonical_order();

/// Measurement strategy for the players, stored as its distinguished effect
/// Z11 (the probability of the rewarded answer pair); the complement I - Z11
/// is the (0,0) answer. Three families:
///   Product        -- P (x) Q with local effects on (A, A0) and (B0, B).
///   MatchedOneWay  -- Alice measures a POVM {P_u}, announces u, Bob answers
///                     1 with the branch effect Q_{1|u}; Z11 = sum_u P_u(x)Q_u.
///   Filtered       -- local contractions on the question slots conjugating
///                     an inner strategy's effect; realizes stochastic-LOCC
///                     pre-processing as part of the measurement.
class Strategy {
public:
    struct Product {
        QuantumOperator p;
        QuantumOperator q;
    };
    struct MatchedOneWay {
        std::vector<QuantumOperator> alice_povm;
        std::vector<QuantumOperator> bob_conditional;
    };
    struct Filtered {
        QuantumOperator filter_a0;
        QuantumOperator filter_b0;
        std::shared_ptr<const Strategy> inner;
    };
    using Variant = std::variant<Product, MatchedOneWay, Filtered>;

    /// Validates the family invariants and caches the realized effect.
    explicit Strategy(Variant v);

    const Variant& variant() const { return variant_; }
    /// Realized Z11 in canonical order [A0, A, B, B0].
    const QuantumOperator& effect() const { return z11_; }

private:
    Variant variant_;
    QuantumOperator z11_;
};

Strategy product(QuantumOperator p, QuantumOperator q);
Strategy matched_one_way(std::vector<QuantumOperator> alice_povm,
                         std::vector<QuantumOperator> bob_conditional);

/// Two-qubit matched strategy: Alice measures the Bell basis on (A, A0) and
/// Bob answers 1 exactly for the paired Bell projector on (B0, B).
/// pairing[u] names Bob's Bell state for Alice's outcome u (a permutation of
/// 0..3 in the order phi+, phi-, psi+, psi-).
Strategy bell_matched(const std::array<int, 4>& pairing);

inline Strategy bell_matched_identity() { return bell_matched({0, 1, 2, 3}); }
/// The pairing (phi+ <-> phi-, psi+ <-> psi-).
inline Strategy bell_matched_twisted() { return bell_matched({1, 0, 3, 2}); }

/// Local filter pair converting |psi> into |phi> with one Kraus pair:
/// (left (x) right) |psi> = sqrt(q) |phi>. Built in the Schmidt bases with
/// left = c sum_i sqrt(nu_i / mu_i) |l_i^phi><l_i^psi| and c = min_i
/// sqrt(mu_i / nu_i) over the support of phi, so q = c^2 = min_i mu_i / nu_i;
/// right is the partial isometry matching the right Schmidt bases.
struct FilterResult {
    Matrix left;
    Matrix right;
    double q = 0.0;
};

/// Throws InfeasibleError when phi has larger Schmidt rank than psi (no
/// such stochastic conversion exists).
FilterResult slocc_filter(const Vector& psi, const Vector& phi, Index dim_left,
                          Index dim_right);

/// Wrap an inner strategy with the filter pair so that playing the wrapped
/// strategy in the game of W equals q times playing the inner strategy in
/// the game of V, where the filter converts the source vector of W into
/// that of V.
Strategy filter_pullback(Strategy inner, const FilterResult& filter);

/// Dual (Heisenberg) action of a separable channel on an effect:
/// sum_j q_j F_j^dag Z F_j with F_j the product of the given local Kraus
/// factors on (A, A0) and (B0, B). Weights must sum to 1.
QuantumOperator channel_dual_pullback(
    const QuantumOperator& z,
    const std::vector<std::pair<QuantumOperator, QuantumOperator>>& kraus_pairs,
    const std::vector<double>& weights);

} // namespace sqgame
