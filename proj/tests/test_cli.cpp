// End-to-end checks of the command-line tool: spawns the real binary, parses
// its JSON, and checks exit codes. The binary path arrives as argv[1].

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include <sqgame/serial.hpp>
#include <sqgame/states.hpp>

#include "support/fixtures.hpp"

namespace {

std::string cli_path;
std::filesystem::path work_dir;

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::string& args) {
    const std::filesystem::path err_file = work_dir / "stderr.txt";
    const std::string command = cli_path + " " + args + " 2>" + err_file.string();
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream err(err_file);
    result.err.assign(std::istreambuf_iterator<char>(err), std::istreambuf_iterator<char>());
    return result;
}

std::string write_file(const std::string& name, const std::string& content) {
    const std::filesystem::path path = work_dir / name;
    std::ofstream out(path);
    out << content;
    return path.string();
}

} // namespace

using namespace sqgame;
using nlohmann::json;

TEST_CASE("witness subcommands emit valid witnesses") {
    const RunResult swap = run_cli("witness swap --d 2");
    REQUIRE(swap.exit_code == 0);
    const Witness w = witness_from_json(json::parse(swap.out));
    CHECK(w.D == 2);
    CHECK((w.op.matrix() + fixtures::swap4()).cwiseAbs().maxCoeff() < 1e-12);

    const RunResult dec = run_cli("witness decomposable --psi bell:2");
    REQUIRE(dec.exit_code == 0);
    CHECK(json::parse(dec.out).at("kind") == "decomposable");

    // Vector files work too; |Psi-> reproduces the reference witness.
    const StateVector psi(SubsystemLayout({{"A0", 2}, {"B0", 2}}),
                          Vector(bell_vector(Bell::psi_minus)));
    const std::string psi_path = write_file("psi.json", to_json(psi).dump());
    const RunResult from_file = run_cli("witness decomposable --psi " + psi_path);
    REQUIRE(from_file.exit_code == 0);
    const Witness loaded = witness_from_json(json::parse(from_file.out));
    CHECK((loaded.op.matrix() - fixtures::wde_matrix()).cwiseAbs().maxCoeff() < 1e-12);

    // Product vectors cannot make a witness: validation error, exit 2.
    Vector product_vec = Vector::Zero(4);
    product_vec(0) = 1.0;
    const StateVector product(SubsystemLayout({{"A0", 2}, {"B0", 2}}), product_vec);
    const std::string product_path = write_file("product_psi.json", to_json(product).dump());
    const RunResult rejected = run_cli("witness decomposable --psi " + product_path);
    CHECK(rejected.exit_code == 2);
}

TEST_CASE("game from-witness and payoff evaluate") {
    const Witness w = fixtures::wde();
    const std::string witness_path = write_file("wde.json", to_json(w).dump());
    const RunResult game = run_cli("game from-witness --witness " + witness_path);
    REQUIRE(game.exit_code == 0);
    const std::string game_path = write_file("game.json", game.out);

    // Total effect Z11 = I wins every question: reward sum_i beta_i.
    const Strategy ones =
        product(QuantumOperator(alice_effect_layout(2, 2), Matrix::Identity(4, 4)),
                QuantumOperator(bob_effect_layout(2, 2), Matrix::Identity(4, 4)));
    const std::string ones_path = write_file("ones.json", to_json(ones).dump());
    const RunResult eval =
        run_cli("payoff evaluate --game " + game_path + " --state bell:phi+ --strategy " +
                ones_path);
    REQUIRE(eval.exit_code == 0);
    double beta_sum = 0.0;
    for (const auto& item : from_witness(w).ensemble.items) beta_sum += item.beta;
    CHECK(std::stod(eval.out) == doctest::Approx(beta_sum).epsilon(1e-9));

    // The worked example through the full pipeline.
    const std::string bell_path =
        write_file("bell_identity.json", to_json(bell_matched_identity()).dump());
    const RunResult worked =
        run_cli("payoff evaluate --game " + game_path + " --state bell:phi+ --strategy " +
                bell_path);
    REQUIRE(worked.exit_code == 0);
    CHECK(std::stod(worked.out) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("measure npt reproduces the Bell example") {
    const RunResult npt = run_cli("measure npt --state bell:phi+ --seed 7");
    REQUIRE(npt.exit_code == 0);
    const json report = json::parse(npt.out);
    CHECK(report.at("value").get<double>() >= 1.0 - 1e-6);
    CHECK(report.at("value").get<double>() <= 1.0 + 1e-9);
}

TEST_CASE("oracle subcommands") {
    const RunResult neg = run_cli("oracle negativity --state bell:phi+");
    REQUIRE(neg.exit_code == 0);
    CHECK(std::stod(neg.out) == doctest::Approx(0.5).epsilon(1e-10));

    const RunResult ppt = run_cli("oracle ppt --state werner:0.5");
    REQUIRE(ppt.exit_code == 0);
    CHECK(std::stod(ppt.out) == doctest::Approx(-0.125).epsilon(1e-10));

    const std::string witness_path = write_file("wde2.json", to_json(fixtures::wde()).dump());
    const RunResult ub =
        run_cli("oracle upper-bound --witness " + witness_path + " --state bell:phi+");
    REQUIRE(ub.exit_code == 0);
    CHECK(std::stod(ub.out) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("payoff optimize is byte-for-byte deterministic for a fixed seed") {
    const std::string witness_path = write_file("wde3.json", to_json(fixtures::wde()).dump());
    const RunResult game = run_cli("game from-witness --witness " + witness_path);
    REQUIRE(game.exit_code == 0);
    const std::string game_path = write_file("game3.json", game.out);

    const std::string cmd = "payoff optimize --game " + game_path +
                            " --state werner:0.8 --family matched --restarts 4 --seed 99";
    const RunResult first = run_cli(cmd);
    const RunResult second = run_cli(cmd);
    REQUIRE(first.exit_code == 0);
    CHECK(first.out == second.out);
    const json report = json::parse(first.out);
    CHECK(report.at("value").get<double>() <=
          report.at("upper_bound").get<double>() + 1e-9);
}

TEST_CASE("simulate emits an estimate report") {
    const std::string witness_path = write_file("wde4.json", to_json(fixtures::wde()).dump());
    const RunResult game = run_cli("game from-witness --witness " + witness_path);
    REQUIRE(game.exit_code == 0);
    const std::string game_path = write_file("game4.json", game.out);
    const std::string bell_path =
        write_file("bell4.json", to_json(bell_matched_identity()).dump());

    const RunResult sim = run_cli("simulate --game " + game_path +
                                  " --state bell:phi+ --strategy " + bell_path +
                                  " --shots 20000 --seed 5");
    REQUIRE(sim.exit_code == 0);
    const json report = json::parse(sim.out);
    CHECK(report.at("shots") == 20000);
    CHECK(report.at("clamp_count") == 0);
    const double mean = report.at("mean").get<double>();
    const double stderr_value = report.at("stderr").get<double>();
    CHECK(std::abs(mean - 1.0) < 5.0 * stderr_value);
}

TEST_CASE("SQGAME_SEED is the fallback seed") {
    const std::string witness_path = write_file("wde5.json", to_json(fixtures::wde()).dump());
    const RunResult game = run_cli("game from-witness --witness " + witness_path);
    const std::string game_path = write_file("game5.json", game.out);

    const std::string base = "payoff optimize --game " + game_path +
                             " --state werner:0.9 --family matched --restarts 2";
    const RunResult via_flag = run_cli(base + " --seed 123");
    // popen runs through sh, so an env assignment prefix works directly.
    const RunResult via_env = [&] {
        const std::string cmd = "SQGAME_SEED=123 " + cli_path + " " + base + " 2>/dev/null";
        RunResult r;
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::array<char, 4096> buffer{};
        size_t n = 0;
        while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
            r.out.append(buffer.data(), n);
        r.exit_code = WEXITSTATUS(pclose(pipe));
        return r;
    }();
    REQUIRE(via_flag.exit_code == 0);
    REQUIRE(via_env.exit_code == 0);
    CHECK(via_env.out == via_flag.out);
}

TEST_CASE("error paths map to the documented exit codes") {
    const std::string bad_json = write_file("bad.json", "{not json");
    const RunResult malformed = run_cli("game from-witness --witness " + bad_json);
    CHECK(malformed.exit_code == 2);
    const json error = json::parse(malformed.err);
    CHECK(error.contains("error"));
    CHECK(error.at("error").contains("message"));

    // Dimension mismatch: a 2x2 game against a 2x3 state.
    const std::string witness_path = write_file("wde6.json", to_json(fixtures::wde()).dump());
    const RunResult game = run_cli("game from-witness --witness " + witness_path);
    const std::string game_path = write_file("game6.json", game.out);
    RngStream rng(3);
    const std::string state23 =
        write_file("state23.json", to_json(fixtures::random_state_ab(rng, 2, 3)).dump());
    const std::string bell_path =
        write_file("bell6.json", to_json(bell_matched_identity()).dump());
    const RunResult mismatch = run_cli("payoff evaluate --game " + game_path + " --state " +
                                       state23 + " --strategy " + bell_path);
    CHECK(mismatch.exit_code == 3);

    // Unknown named state is a validation error.
    const RunResult unknown = run_cli("oracle negativity --state bell:sideways");
    CHECK(unknown.exit_code == 2);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path-to-sqgame-binary>\n");
        return 1;
    }
    cli_path = argv[1];
    work_dir = std::filesystem::temp_directory_path() / "sqgame_cli_test";
    std::filesystem::create_directories(work_dir);
    doctest::Context context;
    context.applyCommandLine(1, argv);
    return context.run();
}
