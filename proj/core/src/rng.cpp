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

#include "sqgame/rng.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/QR>

namespace sqgame {

namespace {

// SplitMix64 finalizer; decorrelates (seed, stream) pairs before seeding.
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_index)
    : engine_(mix64(mix64(seed) ^ mix64(stream_index * 0xD1342543DE82EF95ull + 1))) {}

std::uint64_t RngStream::next_u64() { return engine_(); }

double RngStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform_positive() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

double RngStream::normal() {
    const double u1 = uniform_positive();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex RngStream::complex_normal() {
    const double u1 = uniform_positive();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return {r * std::cos(2.0 * std::numbers::pi * u2),
            r * std::sin(2.0 * std::numbers::pi * u2)};
}

std::size_t RngStream::discrete(const std::vector<double>& weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    double x = uniform() * total;
    for (std::size_t k = 0; k + 1 < weights.size(); ++k) {
        x -= weights[k];
        if (x < 0.0) return k;
    }
    return weights.empty() ? 0 : weights.size() - 1;
}

bool RngStream::bernoulli(double p) { return uniform() < p; }

Vector RngStream::haar_vector(Index dim) {
    Vector v(dim);
    for (Index k = 0; k < dim; ++k) v(k) = complex_normal();
    v /= v.norm();
    return v;
}

Matrix RngStream::haar_unitary(Index dim) {
    Matrix g(dim, dim);
    for (Index i = 0; i < dim; ++i)
        for (Index j = 0; j < dim; ++j) g(i, j) = complex_normal();
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the diagonal phases so the distribution is Haar.
    for (Index k = 0; k < dim; ++k) {
        const Complex d = r(k, k);
        q.col(k) *= (std::abs(d) > 0.0) ? d / std::abs(d) : Complex(1, 0);
    }
    return q;
}

Matrix RngStream::haar_projector(Index dim) {
    const Vector v = haar_vector(dim);
    return v * v.adjoint();
}

Matrix RngStream::random_effect(Index dim) {
    const Matrix u = haar_unitary(dim);
    Eigen::VectorXd spectrum(dim);
    for (Index k = 0; k < dim; ++k) spectrum(k) = uniform();
    return u * spectrum.asDiagonal() * u.adjoint();
}

std::vector<double> RngStream::dirichlet(std::size_t n) {
    std::vector<double> w(n);
    double total = 0.0;
    for (auto& x : w) {
        x = -std::log(uniform_positive());
        total += x;
    }
    for (auto& x : w) x /= total;
    return w;
}

} // namespace sqgame
