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
#include <random>
#include <vector>

#include "sqgame/qop.hpp"

namespace sqgame {

/// Seedable random stream built on std::mt19937_64, whose output sequence is
/// fully pinned by the standard and therefore identical across platforms.
/// Streams are indexed: stream k of seed s is independent of stream k' != k,
/// and the (seed, index) -> sequence map is deterministic. All floating-point
/// draws are derived from raw 64-bit words by fixed arithmetic, avoiding the
/// implementation-defined std::uniform_real_distribution.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream_index = 0);

    std::uint64_t next_u64();
    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform();
    /// Uniform in (0, 1]; safe as a logarithm argument.
    double uniform_positive();
    /// Standard normal via Box-Muller.
    double normal();
    Complex complex_normal();
    /// Index drawn from the probability weights (need not be normalized).
    std::size_t discrete(const std::vector<double>& weights);
    bool bernoulli(double p);

    /// Haar-random unit vector in C^dim.
    Vector haar_vector(Index dim);
    /// Haar-random unitary (Ginibre QR with phase fix).
    Matrix haar_unitary(Index dim);
    /// Rank-one projector onto a Haar-random vector.
    Matrix haar_projector(Index dim);
    /// Random effect 0 <= E <= I with Haar eigenbasis and uniform spectrum.
    Matrix random_effect(Index dim);
    /// Flat Dirichlet weights (normalized exponentials).
    std::vector<double> dirichlet(std::size_t n);

private:
    std::mt19937_64 engine_;
};

/// Stream derivation helper shared by optimizers and the protocol simulator:
/// restart/partition r of a run seeded with s uses RngStream(s, r).
inline RngStream derive_stream(std::uint64_t seed, std::uint64_t index) {
    return RngStream(seed, index);
}

} // namespace sqgame
