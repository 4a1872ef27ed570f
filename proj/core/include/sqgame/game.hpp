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

#include "sqgame/strategy.hpp"
#include "sqgame/witness.hpp"

namespace sqgame {

/// Semiquantum witnessing game: a question ensemble {p_i, tau_i, omega_i}
/// with the answer pair (1,1) rewarded by beta_i / p_i and every other answer
/// pair rewarded zero. The originating witness is retained.
struct Game {
    QuestionEnsemble ensemble;
    std::vector<double> reward11;
    Witness witness;
};

/// Build the game of a witness from its product-state decomposition.
Game from_witness(const Witness& w);

/// Probability of the answer pair (x, y) for question i. A strategy supplies
/// the single distinguished effect Z11; its complement is mapped to (0, 0),
/// so only (1,1) and (0,0) carry probability.
double outcome_probability(const Game& game, const QuantumOperator& rho,
                           const Strategy& strategy, std::size_t i, int x, int y);

/// Average reward sum_i p_i reward11(i) Pr(1,1|i), evaluated question by
/// question through the joint states tau_i (x) rho (x) omega_i.
double average_reward(const Game& game, const QuantumOperator& rho,
                      const Strategy& strategy);

/// The same pay-off computed in compact witness form Tr[Z11 (W^Theta (x) rho)]
/// where Theta transposes both question slots. Agrees with average_reward for
/// every witness by linearity; the two code paths are independent.
double payoff_via_witness(const Witness& w, const QuantumOperator& rho,
                          const Strategy& strategy);

/// The witness with both question slots transposed (sum_i beta_i tau_i (x)
/// omega_i), as used by the witness-form pay-off and the optimizers.
Matrix witness_theta(const Witness& w);

} // namespace sqgame
