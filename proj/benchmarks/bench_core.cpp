#include <benchmark/benchmark.h>

#include <sqgame/game.hpp>
#include <sqgame/optimize.hpp>
#include <sqgame/protocol.hpp>
#include <sqgame/rng.hpp>
#include <sqgame/states.hpp>

using namespace sqgame;

namespace {

Witness bell_witness() { return decomposable_witness(bell_vector(Bell::psi_minus), 2, 2); }

void BM_TensorPermute(benchmark::State& state) {
    const Index d = state.range(0);
    RngStream rng(1);
    const QuantumOperator tau = question_state(labels::a0, rng.random_effect(d));
    const QuantumOperator omega = question_state(labels::b0, rng.random_effect(d));
    const QuantumOperator rho =
        state_ab(Matrix::Identity(d * d, d * d) / static_cast<double>(d * d), d, d);
    for (auto _ : state) {
        const QuantumOperator joint = tensor({tau, rho, omega});
        benchmark::DoNotOptimize(
            permute_subsystems(joint, {labels::b0, labels::b, labels::a, labels::a0}));
    }
}
BENCHMARK(BM_TensorPermute)->Arg(2)->Arg(3)->Arg(4);

void BM_PartialTranspose(benchmark::State& state) {
    const Index d = state.range(0);
    RngStream rng(2);
    Matrix m = rng.random_effect(d * d);
    m /= m.trace().real();
    const QuantumOperator rho = state_ab(m, d, d);
    for (auto _ : state)
        benchmark::DoNotOptimize(partial_transpose(rho, {labels::b}));
}
BENCHMARK(BM_PartialTranspose)->Arg(2)->Arg(4)->Arg(8);

void BM_AverageReward(benchmark::State& state) {
    const Game game = from_witness(bell_witness());
    const QuantumOperator rho = pure_state_ab(bell_vector(Bell::phi_plus), 2, 2);
    const Strategy bell = bell_matched_identity();
    for (auto _ : state)
        benchmark::DoNotOptimize(average_reward(game, rho, bell));
}
BENCHMARK(BM_AverageReward);

void BM_SeesawMatched(benchmark::State& state) {
    const Witness w = bell_witness();
    const QuantumOperator rho = werner_state(0.8);
    SeesawOptions opts;
    opts.restarts = state.range(0);
    opts.seed = 7;
    for (auto _ : state)
        benchmark::DoNotOptimize(seesaw_matched(w, rho, opts).value);
}
BENCHMARK(BM_SeesawMatched)->Arg(1)->Arg(4)->Arg(16);

void BM_PayoffBullet(benchmark::State& state) {
    const QuantumOperator rho = werner_state(0.8);
    SeesawOptions opts;
    opts.seed = 7;
    for (auto _ : state)
        benchmark::DoNotOptimize(payoff_bullet(rho, opts).value);
}
BENCHMARK(BM_PayoffBullet);

void BM_ProtocolShots(benchmark::State& state) {
    const Game game = from_witness(bell_witness());
    const QuantumOperator rho = pure_state_ab(bell_vector(Bell::phi_plus), 2, 2);
    const Strategy bell = bell_matched_identity();
    const long long shots = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(run(game, rho, bell, shots, 3).mean);
    state.SetItemsProcessed(state.iterations() * shots);
}
BENCHMARK(BM_ProtocolShots)->Arg(10000)->Arg(1000000);

} // namespace

BENCHMARK_MAIN();
