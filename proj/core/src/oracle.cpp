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

#include "sqgame/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "sqgame/game.hpp"
#include "sqgame/rng.hpp"

namespace sqgame {

namespace {

Eigensystem partial_transpose_spectrum(const QuantumOperator& rho) {
    if (rho.layout().size() != 2 || !rho.layout().has(labels::a) || !rho.layout().has(labels::b))
        throw LayoutError("oracle: state must live on [A, B]");
    return eig_hermitian(partial_transpose(rho, {labels::b}));
}

// Generalized Bell basis on C^d (x) C^d: (I (x) X^a Z^b) applied to the
// maximally entangled vector, for shift X and clock Z.
std::vector<Vector> generalized_bell_basis(Index d) {
    std::vector<Vector> basis;
    basis.reserve(static_cast<std::size_t>(d * d));
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (Index a = 0; a < d; ++a)
        for (Index b = 0; b < d; ++b) {
            Vector v = Vector::Zero(d * d);
            for (Index i = 0; i < d; ++i) {
                const Index j = (i + a) % d;
                const double phase = 2.0 * std::numbers::pi * static_cast<double>(b * i) /
                                     static_cast<double>(d);
                v(i * d + j) = scale * Complex(std::cos(phase), std::sin(phase));
            }
            basis.push_back(std::move(v));
        }
    return basis;
}

// Projectors onto a locally rotated maximally-entangled basis; the random
// matched strategies draw their branches from these.
std::vector<Matrix> rotated_bell_projectors(RngStream& rng, Index d) {
    const Matrix u1 = rng.haar_unitary(d);
    const Matrix u2 = rng.haar_unitary(d);
    std::vector<Matrix> out;
    for (const Vector& v : generalized_bell_basis(d)) {
        Vector rotated = Vector::Zero(d * d);
        for (Index i = 0; i < d; ++i)
            for (Index j = 0; j < d; ++j)
                for (Index ip = 0; ip < d; ++ip)
                    for (Index jp = 0; jp < d; ++jp)
                        rotated(i * d + j) += u1(i, ip) * u2(j, jp) * v(ip * d + jp);
        out.push_back(rotated * rotated.adjoint());
    }
    return out;
}

} // namespace

double ppt_min_eigenvalue(const QuantumOperator& rho) {
    const Eigensystem es = partial_transpose_spectrum(rho);
    return es.values(es.values.size() - 1);
}

double negativity(const QuantumOperator& rho) {
    const Eigensystem es = partial_transpose_spectrum(rho);
    double total = 0.0;
    for (Index k = 0; k < es.values.size(); ++k)
        if (es.values(k) < 0.0) total -= es.values(k);
    return total;
}

DetectionResult optimal_decomposable_witness(const QuantumOperator& rho) {
    const Eigensystem es = partial_transpose_spectrum(rho);
    const double lambda_min = es.values(es.values.size() - 1);
    if (lambda_min >= -psd_tol)
        throw InfeasibleError("optimal_decomposable_witness: state is PPT, nothing to detect");
    const Index da = rho.layout().dim_of(labels::a);
    const Index db = rho.layout().dim_of(labels::b);
    DetectionResult out{decomposable_witness(es.vectors.col(es.values.size() - 1), da, db), 0.0};
    out.detection_value = evaluate(out.witness, rho);
    return out;
}

QuantumOperator sample_separable(Index dim_a, Index dim_b, int terms, std::uint64_t seed) {
    if (terms < 1) throw ValidationError("sample_separable: terms must be positive");
    RngStream rng(seed);
    const auto weights = rng.dirichlet(static_cast<std::size_t>(terms));
    Matrix rho = Matrix::Zero(dim_a * dim_b, dim_a * dim_b);
    for (int t = 0; t < terms; ++t) {
        const Vector a = rng.haar_vector(dim_a);
        const Vector b = rng.haar_vector(dim_b);
        Vector ab(dim_a * dim_b);
        for (Index i = 0; i < dim_a; ++i)
            for (Index j = 0; j < dim_b; ++j) ab(i * dim_b + j) = a(i) * b(j);
        rho += weights[static_cast<std::size_t>(t)] * (ab * ab.adjoint());
    }
    return QuantumOperator(SubsystemLayout({{labels::a, dim_a}, {labels::b, dim_b}}),
                           std::move(rho));
}

double brute_force_payoff(const Witness& w, const QuantumOperator& rho, int trials,
                          std::uint64_t seed) {
    if (trials < 1) throw ValidationError("brute_force_payoff: trials must be positive");
    RngStream rng(seed);
    const Index da = rho.layout().dim_of(labels::a);
    const Index db = rho.layout().dim_of(labels::b);
    const Index da0 = w.dim_a0(), db0 = w.dim_b0();
    const SubsystemLayout alice = alice_effect_layout(da, da0);
    const SubsystemLayout bob = bob_effect_layout(db0, db);
    const Index na = da * da0, nb = db0 * db;

    const bool bell_like = (da == da0) && (db0 == db);
    double best = -std::numeric_limits<double>::infinity();
    for (int t = 0; t < trials; ++t) {
        if (t % 2 == 0) {
            Strategy s = product(QuantumOperator(alice, rng.random_effect(na)),
                                 QuantumOperator(bob, rng.random_effect(nb)));
            best = std::max(best, payoff_via_witness(w, rho, s));
        } else if (bell_like) {
            // Locally rotated Bell bases with a random branch pairing.
            const auto alice_branches = rotated_bell_projectors(rng, da);
            const auto bob_branches = rotated_bell_projectors(rng, db);
            std::vector<std::size_t> pairing(alice_branches.size());
            for (std::size_t k = 0; k < pairing.size(); ++k) pairing[k] = k;
            for (std::size_t k = pairing.size(); k > 1; --k)
                std::swap(pairing[k - 1], pairing[rng.next_u64() % k]);
            std::vector<QuantumOperator> povm, conditional;
            for (std::size_t k = 0; k < alice_branches.size(); ++k) {
                povm.emplace_back(alice, alice_branches[k]);
                conditional.emplace_back(bob, bob_branches[pairing[k] % bob_branches.size()]);
            }
            Strategy s = matched_one_way(std::move(povm), std::move(conditional));
            best = std::max(best, payoff_via_witness(w, rho, s));
        } else {
            // Asymmetric question slots: fall back to Haar measurement bases.
            const Matrix ua = rng.haar_unitary(na);
            const Matrix ub = rng.haar_unitary(nb);
            std::vector<QuantumOperator> povm, conditional;
            for (Index k = 0; k < na; ++k) {
                povm.emplace_back(alice, Matrix(ua.col(k) * ua.col(k).adjoint()));
                conditional.emplace_back(
                    bob, Matrix(ub.col(k % nb) * ub.col(k % nb).adjoint()));
            }
            Strategy s = matched_one_way(std::move(povm), std::move(conditional));
            best = std::max(best, payoff_via_witness(w, rho, s));
        }
    }
    return best;
}

bool majorizes(std::vector<double> x, std::vector<double> y) {
    const std::size_t n = std::max(x.size(), y.size());
    x.resize(n, 0.0);
    y.resize(n, 0.0);
    const double sx = std::accumulate(x.begin(), x.end(), 0.0);
    const double sy = std::accumulate(y.begin(), y.end(), 0.0);
    if (std::abs(sx - 1.0) > 1e-9 || std::abs(sy - 1.0) > 1e-9)
        throw ValidationError("majorizes: inputs must sum to 1");
    std::sort(x.begin(), x.end(), std::greater<>());
    std::sort(y.begin(), y.end(), std::greater<>());
    double px = 0.0, py = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        px += x[k];
        py += y[k];
        if (px > py + 1e-12) return false;
    }
    return true;
}

} // namespace sqgame
