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

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "sqgame/game.hpp"

namespace sqgame {

struct QuestionTally {
    std::size_t question = 0;
    long long asked = 0;
    long long wins = 0;
};

/// Finite-statistics estimate of the average reward from simulated
/// coincidence counts.
struct EstimateReport {
    double mean = 0.0;
    /// Sample standard deviation of the per-shot rewards divided by
    /// sqrt(shots).
    double std_error = 0.0;
    long long shots = 0;
    std::vector<QuestionTally> per_question;
    std::uint64_t seed = 0;
    int partitions = 1;
    /// Number of per-question probabilities nudged back into [0, 1]; stays 0
    /// for valid effects.
    long long clamp_count = 0;
};

/// Simulate `shots` rounds of the refereed game: draw a question from
/// {p_i}, draw the answer pair (1,1) with its Born probability (the referee
/// sees (0,0) otherwise), and accumulate rewards. Shots are split across
/// `partitions` deterministic sub-streams derived from (seed, partition), so
/// the result depends only on seed and partition count, not on scheduling.
/// When `transcript` is given, one line-delimited record {i, x, y} is
/// written per shot.
EstimateReport run(const Game& game, const QuantumOperator& rho, const Strategy& strategy,
                   long long shots, std::uint64_t seed, int partitions = 1,
                   std::ostream* transcript = nullptr);

/// mean +- z * std_error.
std::pair<double, double> estimate_ci(const EstimateReport& report, double z);

} // namespace sqgame
