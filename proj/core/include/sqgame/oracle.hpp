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

#include "sqgame/witness.hpp"

namespace sqgame {

/// Smallest eigenvalue of rho^(T_B); negative exactly for NPT states.
double ppt_min_eigenvalue(const QuantumOperator& rho);

/// Sum of |negative eigenvalues| of rho^(T_B).
double negativity(const QuantumOperator& rho);

struct DetectionResult {
    Witness witness;
    double detection_value = 0.0;
};

/// Decomposable witness from the most negative eigenvector of rho^(T_B);
/// its expectation on rho equals D |lambda_min|. Throws InfeasibleError for
/// PPT inputs (no decomposable witness detects them).
DetectionResult optimal_decomposable_witness(const QuantumOperator& rho);

/// Random separable state sum_i p_i |a_i><a_i| (x) |b_i><b_i| with Haar
/// factors and flat Dirichlet weights, on labels [A, B].
QuantumOperator sample_separable(Index dim_a, Index dim_b, int terms, std::uint64_t seed);

/// Best reward over `trials` random strategies (half product, half matched
/// one-way with randomly rotated Bell-like bases). Independent check on the
/// see-saw optimizers: it can never beat them by more than solver noise.
double brute_force_payoff(const Witness& w, const QuantumOperator& rho, int trials,
                          std::uint64_t seed);

/// Majorization x < y on probability vectors (zero-padded to equal length):
/// true when every partial sum of the descending-sorted x stays at or below
/// the corresponding sum for y. Returns whether x is majorized by y.
bool majorizes(std::vector<double> x, std::vector<double> y);

} // namespace sqgame
