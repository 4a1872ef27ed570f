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
#include <string>
#include <vector>

#include "sqgame/game.hpp"

namespace sqgame {

struct SeesawOptions {
    int restarts = 16;
    int max_iter = 200;
    double tol = 1e-9;
    std::uint64_t seed = 0;
    /// Alice branch count for matched strategies; 0 means the joint Alice
    /// dimension d_A * d_A0.
    int branches = 0;
    /// Worker cap for independent restarts; results are merged by maximum
    /// with ties broken by restart index, so the outcome does not depend on
    /// scheduling.
    int threads = 1;
};

/// Result of a pay-off maximization. The value is a certified lower bound
/// achieved by `strategy` (re-evaluating the strategy reproduces it); the
/// upper bound is the global spectral bound, valid for every effect.
struct PayoffReport {
    double value = 0.0;
    Strategy strategy;
    double upper_bound = 0.0;
    int iterations = 0;
    int restarts = 0;
    bool converged = false;
    std::uint64_t seed = 0;
    /// Objective after each accepted iteration of the best restart.
    std::vector<double> trace;
    /// Set when the result is a family-restricted lower bound.
    std::string note;
};

/// Sum of positive eigenvalues of W^Theta (x) rho: Tr[Z (W^Theta (x) rho)]
/// can never exceed it for any effect 0 <= Z <= I.
double upper_bound_global(const Witness& w, const QuantumOperator& rho);

/// Alternating maximization over product effects P (x) Q. Each half-step
/// replaces one side with the positive-eigenspace projector of its
/// conditioned operator, so the objective is non-decreasing.
PayoffReport seesaw_product(const Witness& w, const QuantumOperator& rho,
                            const SeesawOptions& opts = {});

/// Alternating maximization over matched one-way LOCC strategies. Bob's
/// branch effects are exact positive-part updates; Alice's POVM follows the
/// discrimination-style fixed-point iteration on the shifted branch
/// operators, accepted only when the objective improves.
PayoffReport seesaw_matched(const Witness& w, const QuantumOperator& rho,
                            const SeesawOptions& opts = {});

/// The single-game NPT-entanglement measure. Pipeline: diagonalize
/// rho^(T_B); PPT states score 0; otherwise build the detecting witness from
/// the most negative eigenvector, optimize that game with seesaw_matched,
/// and pull the optimal strategy back through the stochastic-LOCC filter
/// that converts the played game's witness into the detecting one. Positive
/// for every NPT input.
PayoffReport payoff_npt(const Witness& w, const QuantumOperator& rho,
                        const SeesawOptions& opts = {});

/// Restricted outer maximization over decomposable witnesses built from the
/// most negative eigenvectors of rho^(T_B) (top `family_size`) plus the
/// maximally entangled one, each scored by the NPT pipeline. Faithful for
/// d_A * d_B <= 6; above that the report is flagged as a lower bound that is
/// blind to PPT entanglement.
PayoffReport payoff_bullet(const QuantumOperator& rho, const SeesawOptions& opts = {},
                           int family_size = 3);

struct SLambdaVerdict {
    double lambda = 0.0;
    bool member = false;
    PayoffReport certificate;
};

/// Membership in the convex set of states whose restricted pay-off stays at
/// or below lambda. Non-membership verdicts are rigorous (the certificate
/// strategy achieves more than lambda); membership verdicts are relative to
/// the restricted witness family.
SLambdaVerdict s_lambda_member(const QuantumOperator& rho, double lambda,
                               const SeesawOptions& opts = {});

} // namespace sqgame
