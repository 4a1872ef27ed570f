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

// Command-line front end: build witnesses and games, evaluate and optimize
// pay-offs, run the oracles and the finite-statistics referee simulation.
// Everything is JSON in and JSON out; --seed makes every command
// deterministic down to the output bytes.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <sqgame/oracle.hpp>
#include <sqgame/serial.hpp>
#include <sqgame/states.hpp>

namespace {

using nlohmann::json;
using namespace sqgame;

constexpr int exit_ok = 0;
constexpr int exit_validation = 2;
constexpr int exit_dimension = 3;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file '" + path + "'");
    return json::parse(in);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ValidationError("cannot write file '" + out_path + "'");
    out << text << "\n";
}

void emit_json(const json& j, const std::string& out_path) { emit(j.dump(2), out_path); }

std::string format_scalar(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// Named states: bell:phi+|phi-|psi+|psi-, werner:<v>, maxent:<d>; anything
// else is a path to a state JSON file.
QuantumOperator resolve_state(const std::string& spec) {
    if (spec.rfind("bell:", 0) == 0) {
        const std::string name = spec.substr(5);
        for (int k = 0; k < 4; ++k)
            if (name == bell_names[static_cast<size_t>(k)])
                return pure_state_ab(bell_vector(static_cast<Bell>(k)), 2, 2);
        throw ValidationError("unknown Bell state '" + spec + "'");
    }
    if (spec.rfind("werner:", 0) == 0) return werner_state(std::stod(spec.substr(7)));
    if (spec.rfind("maxent:", 0) == 0) {
        const Index d = std::stol(spec.substr(7));
        return pure_state_ab(maxent_vector(d), d, d);
    }
    return shared_state_from_json(load_json(spec));
}

// --psi accepts bell:<d> (the maximally entangled vector) or a vector file.
Vector resolve_psi(const std::string& spec, Index& dim_a0, Index& dim_b0) {
    if (spec.rfind("bell:", 0) == 0) {
        const Index d = std::stol(spec.substr(5));
        dim_a0 = dim_b0 = d;
        return maxent_vector(d);
    }
    const StateVector vec = vector_from_json(load_json(spec));
    if (vec.layout.size() != 2)
        throw LayoutError("--psi: expected a vector on exactly two subsystems");
    dim_a0 = vec.layout.at(0).dim;
    dim_b0 = vec.layout.at(1).dim;
    return vec.amp;
}

std::uint64_t env_seed() {
    const char* env = std::getenv("SQGAME_SEED");
    return env != nullptr ? std::strtoull(env, nullptr, 10) : 0;
}

struct CommonOpts {
    std::string out;
    std::uint64_t seed = env_seed();
    int threads = 1;
};

SeesawOptions seesaw_opts(const CommonOpts& common, int restarts, int max_iter, double tol) {
    SeesawOptions opts;
    opts.restarts = restarts;
    opts.max_iter = max_iter;
    opts.tol = tol;
    opts.seed = common.seed;
    opts.threads = common.threads;
    return opts;
}

int dispatch(CLI::App& app, int argc, char** argv);

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"semiquantum witnessing games toolkit"};
    app.require_subcommand(1);
    try {
        return dispatch(app, argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const json::exception& e) {
        std::cerr << json{{"error", {{"kind", "json"}, {"message", e.what()}}}}.dump() << "\n";
        return exit_validation;
    } catch (const LayoutError& e) {
        std::cerr << json{{"error", {{"kind", "dimension"}, {"message", e.what()}}}}.dump()
                  << "\n";
        return exit_dimension;
    } catch (const InfeasibleError& e) {
        std::cerr << json{{"error", {{"kind", "infeasible"}, {"message", e.what()}}}}.dump()
                  << "\n";
        return exit_dimension;
    } catch (const ValidationError& e) {
        std::cerr << json{{"error", {{"kind", "validation"}, {"message", e.what()}}}}.dump()
                  << "\n";
        return exit_validation;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", {{"kind", "error"}, {"message", e.what()}}}}.dump() << "\n";
        return exit_validation;
    }
}

namespace {

int dispatch(CLI::App& app, int argc, char** argv) {
    CommonOpts common;

    // witness
    auto* witness_cmd = app.add_subcommand("witness", "construct entanglement witnesses");
    witness_cmd->require_subcommand(1);
    auto* w_dec = witness_cmd->add_subcommand("decomposable", "witness from an entangled vector");
    std::string psi_spec;
    w_dec->add_option("--psi", psi_spec, "vector file or bell:<d>")->required();
    w_dec->add_option("--out", common.out, "output file (default stdout)");
    auto* w_swap = witness_cmd->add_subcommand("swap", "the swap-operator witness");
    Index swap_d = 2;
    w_swap->add_option("--d", swap_d, "local dimension")->required();
    w_swap->add_option("--out", common.out, "output file (default stdout)");

    // game
    auto* game_cmd = app.add_subcommand("game", "build witnessing games");
    game_cmd->require_subcommand(1);
    auto* g_from = game_cmd->add_subcommand("from-witness", "decompose a witness into a game");
    std::string witness_path;
    g_from->add_option("--witness", witness_path, "witness JSON file")->required();
    g_from->add_option("--out", common.out, "output file (default stdout)");

    // payoff
    auto* payoff_cmd = app.add_subcommand("payoff", "evaluate or optimize pay-offs");
    payoff_cmd->require_subcommand(1);
    auto* p_eval = payoff_cmd->add_subcommand("evaluate", "average reward of a fixed strategy");
    std::string game_path, state_spec, strategy_path;
    p_eval->add_option("--game", game_path, "game JSON file")->required();
    p_eval->add_option("--state", state_spec, "state file or named state")->required();
    p_eval->add_option("--strategy", strategy_path, "strategy JSON file")->required();
    p_eval->add_option("--out", common.out, "output file (default stdout)");

    auto* p_opt = payoff_cmd->add_subcommand("optimize", "see-saw pay-off maximization");
    std::string family = "matched";
    int restarts = 16, max_iter = 200;
    double tol = 1e-9;
    p_opt->add_option("--game", game_path, "game JSON file")->required();
    p_opt->add_option("--state", state_spec, "state file or named state")->required();
    p_opt->add_option("--family", family, "product|matched")
        ->check(CLI::IsMember({"product", "matched"}));
    p_opt->add_option("--restarts", restarts, "random restarts");
    p_opt->add_option("--max-iter", max_iter, "iteration cap per restart");
    p_opt->add_option("--tol", tol, "convergence tolerance");
    p_opt->add_option("--seed", common.seed, "RNG seed");
    p_opt->add_option("--threads", common.threads, "worker cap");
    p_opt->add_option("--out", common.out, "output file (default stdout)");

    // measure
    auto* measure_cmd = app.add_subcommand("measure", "entanglement measures");
    measure_cmd->require_subcommand(1);
    auto* m_npt = measure_cmd->add_subcommand("npt", "single-game NPT measure");
    std::string npt_game_path;
    m_npt->add_option("--state", state_spec, "state file or named state")->required();
    m_npt->add_option("--game", npt_game_path, "game JSON file (default: swap-like witness)");
    m_npt->add_option("--restarts", restarts, "random restarts");
    m_npt->add_option("--max-iter", max_iter, "iteration cap per restart");
    m_npt->add_option("--tol", tol, "convergence tolerance");
    m_npt->add_option("--seed", common.seed, "RNG seed");
    m_npt->add_option("--threads", common.threads, "worker cap");
    m_npt->add_option("--out", common.out, "output file (default stdout)");

    auto* m_bullet = measure_cmd->add_subcommand("bullet", "restricted-family measure");
    m_bullet->add_option("--state", state_spec, "state file or named state")->required();
    m_bullet->add_option("--restarts", restarts, "random restarts");
    m_bullet->add_option("--max-iter", max_iter, "iteration cap per restart");
    m_bullet->add_option("--tol", tol, "convergence tolerance");
    m_bullet->add_option("--seed", common.seed, "RNG seed");
    m_bullet->add_option("--threads", common.threads, "worker cap");
    m_bullet->add_option("--out", common.out, "output file (default stdout)");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "independent ground-truth computations");
    oracle_cmd->require_subcommand(1);
    auto* o_neg = oracle_cmd->add_subcommand("negativity", "negativity of a state");
    o_neg->add_option("--state", state_spec, "state file or named state")->required();
    o_neg->add_option("--out", common.out, "output file (default stdout)");
    auto* o_ppt = oracle_cmd->add_subcommand("ppt", "minimum partial-transpose eigenvalue");
    o_ppt->add_option("--state", state_spec, "state file or named state")->required();
    o_ppt->add_option("--out", common.out, "output file (default stdout)");
    auto* o_ub = oracle_cmd->add_subcommand("upper-bound", "global spectral pay-off bound");
    o_ub->add_option("--state", state_spec, "state file or named state")->required();
    o_ub->add_option("--witness", witness_path, "witness JSON file");
    o_ub->add_option("--game", game_path, "game JSON file (alternative source of witness)");
    o_ub->add_option("--out", common.out, "output file (default stdout)");

    // simulate
    auto* sim_cmd = app.add_subcommand("simulate", "finite-statistics referee simulation");
    long long shots = 0;
    int partitions = 1;
    std::string transcript_path;
    sim_cmd->add_option("--game", game_path, "game JSON file")->required();
    sim_cmd->add_option("--state", state_spec, "state file or named state")->required();
    sim_cmd->add_option("--strategy", strategy_path, "strategy JSON file")->required();
    sim_cmd->add_option("--shots", shots, "number of rounds")->required();
    sim_cmd->add_option("--seed", common.seed, "RNG seed");
    sim_cmd->add_option("--partitions", partitions, "deterministic shot partitions");
    sim_cmd->add_option("--transcript", transcript_path, "line-delimited {i,x,y} records");
    sim_cmd->add_option("--out", common.out, "output file (default stdout)");

    app.parse(argc, argv);

    if (w_dec->parsed()) {
        Index da0 = 0, db0 = 0;
        const Vector psi = resolve_psi(psi_spec, da0, db0);
        emit_json(to_json(decomposable_witness(psi, da0, db0)), common.out);
        return exit_ok;
    }
    if (w_swap->parsed()) {
        emit_json(to_json(swap_witness(swap_d)), common.out);
        return exit_ok;
    }
    if (g_from->parsed()) {
        emit_json(to_json(from_witness(witness_from_json(load_json(witness_path)))),
                  common.out);
        return exit_ok;
    }
    if (p_eval->parsed()) {
        const Game game = game_from_json(load_json(game_path));
        const QuantumOperator rho = resolve_state(state_spec);
        const Strategy strategy = strategy_from_json(load_json(strategy_path));
        emit(format_scalar(average_reward(game, rho, strategy)), common.out);
        return exit_ok;
    }
    if (p_opt->parsed()) {
        const Game game = game_from_json(load_json(game_path));
        const QuantumOperator rho = resolve_state(state_spec);
        const SeesawOptions opts = seesaw_opts(common, restarts, max_iter, tol);
        const PayoffReport report = family == "product"
                                        ? seesaw_product(game.witness, rho, opts)
                                        : seesaw_matched(game.witness, rho, opts);
        emit_json(to_json(report), common.out);
        return exit_ok;
    }
    if (m_npt->parsed()) {
        const QuantumOperator rho = resolve_state(state_spec);
        const Index da = rho.layout().at(0).dim, db = rho.layout().at(1).dim;
        Witness w = npt_game_path.empty()
                        ? decomposable_witness(embedded_maxent_vector(da, db), da, db)
                        : game_from_json(load_json(npt_game_path)).witness;
        const SeesawOptions opts = seesaw_opts(common, restarts, max_iter, tol);
        emit_json(to_json(payoff_npt(w, rho, opts)), common.out);
        return exit_ok;
    }
    if (m_bullet->parsed()) {
        const QuantumOperator rho = resolve_state(state_spec);
        const SeesawOptions opts = seesaw_opts(common, restarts, max_iter, tol);
        emit_json(to_json(payoff_bullet(rho, opts)), common.out);
        return exit_ok;
    }
    if (o_neg->parsed()) {
        emit(format_scalar(negativity(resolve_state(state_spec))), common.out);
        return exit_ok;
    }
    if (o_ppt->parsed()) {
        emit(format_scalar(ppt_min_eigenvalue(resolve_state(state_spec))), common.out);
        return exit_ok;
    }
    if (o_ub->parsed()) {
        const QuantumOperator rho = resolve_state(state_spec);
        std::optional<Witness> w;
        if (!witness_path.empty())
            w = witness_from_json(load_json(witness_path));
        else if (!game_path.empty())
            w = game_from_json(load_json(game_path)).witness;
        else
            throw ValidationError("oracle upper-bound: pass --witness or --game");
        emit(format_scalar(upper_bound_global(*w, rho)), common.out);
        return exit_ok;
    }
    if (sim_cmd->parsed()) {
        const Game game = game_from_json(load_json(game_path));
        const QuantumOperator rho = resolve_state(state_spec);
        const Strategy strategy = strategy_from_json(load_json(strategy_path));
        std::ofstream transcript;
        std::ostream* transcript_ptr = nullptr;
        if (!transcript_path.empty()) {
            transcript.open(transcript_path);
            if (!transcript)
                throw ValidationError("cannot write transcript '" + transcript_path + "'");
            transcript_ptr = &transcript;
        }
        const EstimateReport report =
            run(game, rho, strategy, shots, common.seed, partitions, transcript_ptr);
        emit_json(to_json(report), common.out);
        return exit_ok;
    }
    throw ValidationError("no subcommand dispatched");
}

} // namespace
