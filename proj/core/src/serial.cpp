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

#include "sqgame/serial.hpp"

#include <cmath>

namespace sqgame {

using nlohmann::json;

namespace {

json complex_list(const Matrix& m) {
    json out = json::array();
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            out.push_back({m(i, j).real(), m(i, j).imag()});
    return out;
}

json complex_list(const Vector& v) {
    json out = json::array();
    for (Index i = 0; i < v.size(); ++i) out.push_back({v(i).real(), v(i).imag()});
    return out;
}

Complex complex_from(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ValidationError("json: complex entries must be [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

SubsystemLayout layout_from(const json& j) {
    if (!j.contains("labels") || !j.contains("dims"))
        throw ValidationError("json: operator needs 'labels' and 'dims'");
    const auto& labels_j = j.at("labels");
    const auto& dims_j = j.at("dims");
    if (!labels_j.is_array() || !dims_j.is_array() || labels_j.size() != dims_j.size())
        throw ValidationError("json: 'labels' and 'dims' must be arrays of equal length");
    std::vector<Subsystem> entries;
    for (size_t k = 0; k < labels_j.size(); ++k) {
        if (!labels_j[k].is_string() || !dims_j[k].is_number_integer())
            throw ValidationError("json: labels are strings, dims are integers");
        entries.push_back({labels_j[k].get<std::string>(), dims_j[k].get<Index>()});
    }
    return SubsystemLayout(std::move(entries));
}

json layout_to(const SubsystemLayout& layout) {
    json j;
    j["labels"] = layout.label_list();
    j["dims"] = layout.dim_list();
    return j;
}

Vector vector_data_from(const json& j, Index expected) {
    if (!j.is_array() || static_cast<Index>(j.size()) != expected)
        throw ValidationError("json: vector length does not match dims");
    Vector v(expected);
    for (Index k = 0; k < expected; ++k) v(k) = complex_from(j[static_cast<size_t>(k)]);
    return v;
}

/// Same matrix, new labels assigned by position.
QuantumOperator relabel(const QuantumOperator& op, const std::vector<std::string>& names) {
    if (static_cast<Index>(names.size()) != op.layout().size())
        throw LayoutError("relabel: label count mismatch");
    std::vector<Subsystem> entries;
    for (Index k = 0; k < op.layout().size(); ++k)
        entries.push_back({names[static_cast<size_t>(k)], op.layout().at(k).dim});
    return QuantumOperator(SubsystemLayout(std::move(entries)), op.matrix());
}

} // namespace

json to_json(const QuantumOperator& op) {
    json j = layout_to(op.layout());
    j["data"] = complex_list(op.matrix());
    return j;
}

json to_json(const StateVector& vec) {
    json j = layout_to(vec.layout);
    j["vec"] = complex_list(vec.amp);
    return j;
}

QuantumOperator operator_from_json(const json& j) {
    SubsystemLayout layout = layout_from(j);
    if (!j.contains("data")) throw ValidationError("json: operator needs 'data'");
    const auto& data = j.at("data");
    const Index n = layout.total_dim();
    if (!data.is_array() || static_cast<Index>(data.size()) != n * n)
        throw ValidationError("json: 'data' must hold side^2 row-major entries");
    Matrix m(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index jj = 0; jj < n; ++jj)
            m(i, jj) = complex_from(data[static_cast<size_t>(i * n + jj)]);
    return QuantumOperator(std::move(layout), std::move(m));
}

StateVector vector_from_json(const json& j) {
    SubsystemLayout layout = layout_from(j);
    if (!j.contains("vec")) throw ValidationError("json: state vector needs 'vec'");
    Vector v = vector_data_from(j.at("vec"), layout.total_dim());
    return StateVector(std::move(layout), std::move(v));
}

json to_json(const Witness& w) {
    json j = to_json(w.op);
    j["D"] = w.D;
    j["kind"] = w.kind == WitnessKind::decomposable ? "decomposable" : "generic";
    if (w.source_vector.has_value()) j["psi"] = complex_list(*w.source_vector);
    return j;
}

Witness witness_from_json(const json& j) {
    QuantumOperator op = relabel(operator_from_json(j), {labels::a0, labels::b0});
    if (!j.contains("kind") || !j.at("kind").is_string())
        throw ValidationError("json: witness needs a 'kind' string");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "decomposable") {
        if (!j.contains("psi"))
            throw ValidationError("json: decomposable witness needs its source vector 'psi'");
        const Vector psi = vector_data_from(j.at("psi"), op.dim());
        Witness w = decomposable_witness(psi, op.layout().dim_of(labels::a0),
                                         op.layout().dim_of(labels::b0));
        if ((w.op.matrix() - op.matrix()).cwiseAbs().maxCoeff() > 1e-9)
            throw ValidationError("json: witness matrix does not match its source vector");
        return w;
    }
    if (kind != "generic") throw ValidationError("json: unknown witness kind '" + kind + "'");
    Witness w = generic_witness(std::move(op));
    if (j.contains("D") && j.at("D").get<Index>() != w.D)
        throw ValidationError("json: witness D does not match min(d_A0, d_B0)");
    return w;
}

json to_json(const QuestionEnsemble& ensemble) {
    json j = json::array();
    for (const auto& item : ensemble.items)
        j.push_back({{"p", item.p},
                     {"beta", item.beta},
                     {"tau", to_json(item.tau)},
                     {"omega", to_json(item.omega)}});
    return j;
}

QuestionEnsemble ensemble_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw ValidationError("json: ensemble must be a nonempty array");
    QuestionEnsemble ensemble;
    double p_sum = 0.0;
    for (const auto& item : j) {
        QuestionItem q{item.at("p").get<double>(), item.at("beta").get<double>(),
                       relabel(operator_from_json(item.at("tau")), {labels::a0}),
                       relabel(operator_from_json(item.at("omega")), {labels::b0})};
        if (q.p <= 0.0) throw ValidationError("json: ensemble probabilities must be positive");
        if (!is_state(q.tau) || !is_state(q.omega))
            throw ValidationError("json: ensemble questions must be density operators");
        p_sum += q.p;
        ensemble.items.push_back(std::move(q));
    }
    if (std::abs(p_sum - 1.0) > 1e-9)
        throw ValidationError("json: ensemble probabilities must sum to 1");
    return ensemble;
}

json to_json(const Game& game) {
    return {{"witness", to_json(game.witness)},
            {"ensemble", to_json(game.ensemble)},
            {"reward11", game.reward11}};
}

Game game_from_json(const json& j) {
    Game game{ensemble_from_json(j.at("ensemble")), {}, witness_from_json(j.at("witness"))};
    const auto& rewards = j.at("reward11");
    if (!rewards.is_array() || rewards.size() != game.ensemble.items.size())
        throw ValidationError("json: reward11 must match the ensemble length");
    for (size_t i = 0; i < rewards.size(); ++i) {
        const double r = rewards[i].get<double>();
        const auto& item = game.ensemble.items[i];
        if (std::abs(r * item.p - item.beta) > 1e-9 * (1.0 + std::abs(item.beta)))
            throw ValidationError("json: reward11 * p must equal beta");
        game.reward11.push_back(r);
    }
    return game;
}

json to_json(const Strategy& strategy) {
    json j;
    if (const auto* prod = std::get_if<Strategy::Product>(&strategy.variant())) {
        j["variant"] = "product";
        j["P"] = to_json(prod->p);
        j["Q"] = to_json(prod->q);
    } else if (const auto* mow = std::get_if<Strategy::MatchedOneWay>(&strategy.variant())) {
        j["variant"] = "matched_one_way";
        j["alice_povm"] = json::array();
        j["bob_conditional"] = json::array();
        for (const auto& p : mow->alice_povm) j["alice_povm"].push_back(to_json(p));
        for (const auto& q : mow->bob_conditional) j["bob_conditional"].push_back(to_json(q));
    } else {
        const auto& filt = std::get<Strategy::Filtered>(strategy.variant());
        j["variant"] = "filtered";
        j["filter_a0"] = to_json(filt.filter_a0);
        j["filter_b0"] = to_json(filt.filter_b0);
        j["inner"] = to_json(*filt.inner);
    }
    return j;
}

Strategy strategy_from_json(const json& j) {
    if (!j.contains("variant") || !j.at("variant").is_string())
        throw ValidationError("json: strategy needs a 'variant' tag");
    const std::string variant = j.at("variant").get<std::string>();
    const std::vector<std::string> alice{labels::a, labels::a0};
    const std::vector<std::string> bob{labels::b0, labels::b};
    if (variant == "product") {
        return product(relabel(operator_from_json(j.at("P")), alice),
                       relabel(operator_from_json(j.at("Q")), bob));
    }
    if (variant == "matched_one_way") {
        std::vector<QuantumOperator> povm, conditional;
        for (const auto& p : j.at("alice_povm"))
            povm.push_back(relabel(operator_from_json(p), alice));
        for (const auto& q : j.at("bob_conditional"))
            conditional.push_back(relabel(operator_from_json(q), bob));
        return matched_one_way(std::move(povm), std::move(conditional));
    }
    if (variant == "filtered") {
        auto inner = std::make_shared<const Strategy>(strategy_from_json(j.at("inner")));
        return Strategy(Strategy::Filtered{
            relabel(operator_from_json(j.at("filter_a0")), {labels::a0}),
            relabel(operator_from_json(j.at("filter_b0")), {labels::b0}), std::move(inner)});
    }
    throw ValidationError("json: unknown strategy variant '" + variant + "'");
}

json to_json(const PayoffReport& report) {
    json j{{"value", report.value},
           {"upper_bound", report.upper_bound},
           {"converged", report.converged},
           {"iterations", report.iterations},
           {"restarts", report.restarts},
           {"seed", report.seed},
           {"strategy", to_json(report.strategy)},
           {"trace", report.trace}};
    if (!report.note.empty()) j["note"] = report.note;
    return j;
}

json to_json(const EstimateReport& report) {
    json per = json::array();
    for (const auto& tally : report.per_question)
        per.push_back({{"i", tally.question}, {"n", tally.asked}, {"wins", tally.wins}});
    return {{"mean", report.mean},
            {"stderr", report.std_error},
            {"shots", report.shots},
            {"seed", report.seed},
            {"partitions", report.partitions},
            {"clamp_count", report.clamp_count},
            {"per_question", per}};
}

json to_json(const SLambdaVerdict& verdict) {
    return {{"lambda", verdict.lambda},
            {"member", verdict.member},
            {"certificate", to_json(verdict.certificate)}};
}

QuantumOperator shared_state_from_json(const json& j) {
    QuantumOperator op = operator_from_json(j);
    if (op.layout().size() != 2)
        throw LayoutError("state: expected exactly two subsystems");
    op = relabel(op, {labels::a, labels::b});
    if (!is_state(op))
        throw ValidationError("state: operator is not a density operator");
    return op;
}

} // namespace sqgame
