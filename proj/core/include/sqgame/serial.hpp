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

#include <nlohmann/json.hpp>

#include "sqgame/optimize.hpp"
#include "sqgame/protocol.hpp"

namespace sqgame {

// Operators serialize as {"labels": [...], "dims": [...], "data": [[re,im],
// ...]} with row-major data; vectors use a "vec" key instead of "data".
// Containers wrap these: witnesses add D/kind/psi, ensembles are arrays of
// {p, beta, tau, omega}, strategies are tagged by variant name.

nlohmann::json to_json(const QuantumOperator& op);
nlohmann::json to_json(const StateVector& vec);
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const QuestionEnsemble& ensemble);
nlohmann::json to_json(const Game& game);
nlohmann::json to_json(const Strategy& strategy);
nlohmann::json to_json(const PayoffReport& report);
nlohmann::json to_json(const EstimateReport& report);
nlohmann::json to_json(const SLambdaVerdict& verdict);

QuantumOperator operator_from_json(const nlohmann::json& j);
StateVector vector_from_json(const nlohmann::json& j);
Witness witness_from_json(const nlohmann::json& j);
QuestionEnsemble ensemble_from_json(const nlohmann::json& j);
Game game_from_json(const nlohmann::json& j);
Strategy strategy_from_json(const nlohmann::json& j);

/// Parse a two-party density operator and canonicalize its labels to [A, B].
QuantumOperator shared_state_from_json(const nlohmann::json& j);

} // namespace sqgame
