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

#include "sqgame/protocol.hpp"

#include <cmath>
#include <ostream>

#include "sqgame/rng.hpp"

namespace sqgame {

EstimateReport run(const Game& game, const QuantumOperator& rho, const Strategy& strategy,
                   long long shots, std::uint64_t seed, int partitions,
                   std::ostream* transcript) {
    if (shots < 1) throw ValidationError("protocol: shots must be positive");
    if (partitions < 1 || partitions > shots)
        throw ValidationError("protocol: partitions must be in [1, shots]");

    const std::size_t questions = game.ensemble.items.size();
    EstimateReport report;
    report.shots = shots;
    report.seed = seed;
    report.partitions = partitions;
    report.per_question.resize(questions);
    for (std::size_t i = 0; i < questions; ++i) report.per_question[i].question = i;

    // Per-question win probabilities are fixed by the game, state and
    // strategy; compute them once. outcome_probability validates effects and
    // rejects anything outside [-1e-10, 1 + 1e-10].
    std::vector<double> weights(questions), win_probability(questions);
    for (std::size_t i = 0; i < questions; ++i) {
        weights[i] = game.ensemble.items[i].p;
        const auto& item = game.ensemble.items[i];
        const QuantumOperator joint = tensor({item.tau, rho, item.omega});
        double p = (strategy.effect().matrix() * joint.matrix()).trace().real();
        if (p < -1e-10 || p > 1.0 + 1e-10)
            throw ValidationError("protocol: effect produced probability outside [0, 1]");
        if (p < 0.0 || p > 1.0) {
            p = std::clamp(p, 0.0, 1.0);
            ++report.clamp_count;
        }
        win_probability[i] = p;
    }

    double reward_sum = 0.0, reward_sq_sum = 0.0;
    const long long base = shots / partitions, extra = shots % partitions;
    for (int part = 0; part < partitions; ++part) {
        RngStream rng = derive_stream(seed, static_cast<std::uint64_t>(part));
        const long long n = base + (part < extra ? 1 : 0);
        for (long long s = 0; s < n; ++s) {
            const std::size_t i = rng.discrete(weights);
            const bool win = rng.bernoulli(win_probability[i]);
            ++report.per_question[i].asked;
            double reward = 0.0;
            if (win) {
                ++report.per_question[i].wins;
                reward = game.reward11[i];
            }
            reward_sum += reward;
            reward_sq_sum += reward * reward;
            if (transcript != nullptr)
                *transcript << "{\"i\":" << i << ",\"x\":" << (win ? 1 : 0)
                            << ",\"y\":" << (win ? 1 : 0) << "}\n";
        }
    }

    report.mean = reward_sum / static_cast<double>(shots);
    if (shots > 1) {
        const double variance =
            std::max(0.0, (reward_sq_sum - static_cast<double>(shots) * report.mean * report.mean) /
                              static_cast<double>(shots - 1));
        report.std_error = std::sqrt(variance / static_cast<double>(shots));
    }
    return report;
}

std::pair<double, double> estimate_ci(const EstimateReport& report, double z) {
    if (z < 0.0) throw ValidationError("estimate_ci: z must be nonnegative");
    return {report.mean - z * report.std_error, report.mean + z * report.std_error};
}

} // namespace sqgame
