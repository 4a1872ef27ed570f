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
#include <optional>
#include <vector>

#include "sqgame/qop.hpp"

namespace sqgame {

enum class WitnessKind { decomposable, generic };

/// Entanglement witness on the question slots [A0, B0]. Sign convention:
/// Tr(W rho) > 0 flags entanglement while Tr(W sigma) <= 0 for every
/// separable sigma, and the trace is normalized to -D with
/// D = min(d_A0, d_B0). Decomposable witnesses are -D |psi><psi|^(T_B0) for
/// an entangled |psi| and detect exactly the NPT states.
struct Witness {
    QuantumOperator op;
    Index D = 0;
    WitnessKind kind = WitnessKind::generic;
    std::optional<Vector> source_vector;

    Index dim_a0() const { return op.layout().dim_of(labels::a0); }
    Index dim_b0() const { return op.layout().dim_of(labels::b0); }
};

/// Witness -D |psi><psi|^(T_B0) from a unit vector psi on C^{da0} (x) C^{db0}.
/// Throws ValidationError when psi has Schmidt rank 1 (product vectors make
/// no witness).
Witness decomposable_witness(const Vector& psi, Index dim_a0, Index dim_b0);

/// The d x d swap-operator witness: the witness built from the maximally
/// entangled vector. Our trace normalization Tr W = -d makes the stored
/// matrix equal to minus the swap operator (the bare swap has trace +d).
Witness swap_witness(Index d);

/// Wrap a Hermitian operator with Tr = -min(d_A0, d_B0) as a generic witness.
/// Block negativity is the caller's responsibility (see
/// is_block_negative_sampled).
Witness generic_witness(QuantumOperator op);

/// Tr(W rho) as a real number; the imaginary residue (< 1e-10 for valid
/// inputs) is discarded.
double evaluate(const Witness& w, const QuantumOperator& rho);

struct BlockNegativityReport {
    bool block_negative = false;
    /// Largest sampled product expectation <a,b|W|a,b>.
    double worst_violation = 0.0;
};

/// Samples n Haar-random product vectors; reports false when any expectation
/// exceeds +1e-9.
BlockNegativityReport is_block_negative_sampled(const Witness& w, int n, std::uint64_t seed);

/// One question pair: probability p, real coefficient beta, and the states
/// tau (sent to Alice on A0) and omega (sent to Bob on B0). The source
/// witness reconstructs as sum_i beta_i tau_i^T (x) omega_i^T.
struct QuestionItem {
    double p = 0.0;
    double beta = 0.0;
    QuantumOperator tau;
    QuantumOperator omega;
};

struct QuestionEnsemble {
    std::vector<QuestionItem> items;
};

/// Expand a witness over the fixed informationally complete product basis
/// (per side: computational projectors plus the +1 and +i superposition
/// projectors). Probabilities are proportional to |beta|; zero-coefficient
/// terms are dropped.
QuestionEnsemble decompose_product_ensemble(const Witness& w);

/// sum_i beta_i tau_i^T (x) omega_i^T; inverse of the decomposition.
QuantumOperator reconstruct(const QuestionEnsemble& ensemble);

} // namespace sqgame
