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

#include "sqgame/game.hpp"

#include <cmath>

namespace sqgame {

namespace {

constexpr double probability_tol = 1e-10;

void require_shared_state(const QuantumOperator& rho) {
    if (rho.layout().size() != 2 || !rho.layout().has(labels::a) || !rho.layout().has(labels::b))
        throw LayoutError("game: shared state must live on [A, B]");
}

double effect_probability(const QuantumOperator& z, const QuantumOperator& joint) {
    if (z.layout() != joint.layout())
        throw LayoutError("game: strategy effect does not match the question/state layout");
    return (z.matrix() * joint.matrix()).trace().real();
}

} // namespace

Game from_witness(const Witness& w) {
    Game game{decompose_product_ensemble(w), {}, w};
    game.reward11.reserve(game.ensemble.items.size());
    for (const auto& item : game.ensemble.items)
        game.reward11.push_back(item.beta / item.p);
    return game;
}

double outcome_probability(const Game& game, const QuantumOperator& rho,
                           const Strategy& strategy, std::size_t i, int x, int y) {
    if (i >= game.ensemble.items.size())
        throw ValidationError("outcome_probability: question index out of range");
    require_shared_state(rho);
    const auto& item = game.ensemble.items[i];
    const QuantumOperator joint = tensor({item.tau, rho, item.omega});
    double p11 = effect_probability(strategy.effect(), joint);
    if (p11 < -probability_tol || p11 > 1.0 + probability_tol)
        throw ValidationError("outcome_probability: effect produced probability outside [0, 1]");
    p11 = std::clamp(p11, 0.0, 1.0);
    if (x == 1 && y == 1) return p11;
    if (x == 0 && y == 0) return 1.0 - p11;
    return 0.0;
}

double average_reward(const Game& game, const QuantumOperator& rho,
                      const Strategy& strategy) {
    require_shared_state(rho);
    double total = 0.0;
    for (std::size_t i = 0; i < game.ensemble.items.size(); ++i) {
        const auto& item = game.ensemble.items[i];
        const QuantumOperator joint = tensor({item.tau, rho, item.omega});
        total += item.p * game.reward11[i] * effect_probability(strategy.effect(), joint);
    }
    return total;
}

Matrix witness_theta(const Witness& w) {
    // Theta transposes both question slots; on the product basis of A0 (x) B0
    // that is the plain matrix transpose.
    return w.op.matrix().transpose();
}

double payoff_via_witness(const Witness& w, const QuantumOperator& rho,
                          const Strategy& strategy) {
    require_shared_state(rho);
    const QuantumOperator theta(w.op.layout(), witness_theta(w));
    const QuantumOperator joint =
        permute_subsystems(tensor(theta, rho), canonical_order());
    return effect_probability(strategy.effect(), joint);
}

} // namespace sqgame
