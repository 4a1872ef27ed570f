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

#include "sqgame/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sqgame {

SubsystemLayout alice_effect_layout(Index dim_a, Index dim_a0) {
    return SubsystemLayout({{labels::a, dim_a}, {labels::a0, dim_a0}});
}

SubsystemLayout bob_effect_layout(Index dim_b0, Index dim_b) {
    return SubsystemLayout({{labels::b0, dim_b0}, {labels::b, dim_b}});
}

const std::vector<std::string>& canonical_order() {
    static const std::vector<std::string> order{labels::a0, labels::a, labels::b, labels::b0};
    return order;
}

namespace {

constexpr double povm_completeness_tol = 1e-8;
constexpr double filter_norm_tol = 1e-10;

void require_alice_effect(const QuantumOperator& p) {
    if (p.layout().size() != 2 || !p.layout().has(labels::a) || !p.layout().has(labels::a0))
        throw LayoutError("strategy: Alice effects live on [A, A0]");
}

void require_bob_effect(const QuantumOperator& q) {
    if (q.layout().size() != 2 || !q.layout().has(labels::b0) || !q.layout().has(labels::b))
        throw LayoutError("strategy: Bob effects live on [B0, B]");
}

QuantumOperator joint_effect(const QuantumOperator& p, const QuantumOperator& q) {
    return permute_subsystems(tensor(p, q), canonical_order());
}

QuantumOperator realize(const Strategy::Variant& v) {
    if (const auto* prod = std::get_if<Strategy::Product>(&v)) {
        require_alice_effect(prod->p);
        require_bob_effect(prod->q);
        if (!is_effect(prod->p) || !is_effect(prod->q))
            throw ValidationError("product strategy: operators are not valid effects");
        return joint_effect(prod->p, prod->q);
    }
    if (const auto* mow = std::get_if<Strategy::MatchedOneWay>(&v)) {
        if (mow->alice_povm.empty() || mow->alice_povm.size() != mow->bob_conditional.size())
            throw ValidationError("matched strategy: branch lists are empty or mismatched");
        Matrix povm_sum = Matrix::Zero(mow->alice_povm.front().dim(),
                                       mow->alice_povm.front().dim());
        for (const auto& p : mow->alice_povm) {
            require_alice_effect(p);
            if (!is_hermitian(p.matrix()) || !is_psd(p.matrix()))
                throw ValidationError("matched strategy: POVM element is not positive");
            povm_sum += p.matrix();
        }
        if ((povm_sum - Matrix::Identity(povm_sum.rows(), povm_sum.cols()))
                .cwiseAbs()
                .maxCoeff() > povm_completeness_tol)
            throw ValidationError("matched strategy: Alice POVM does not sum to identity");
        QuantumOperator z = joint_effect(mow->alice_povm.front(), mow->bob_conditional.front());
        Matrix acc = Matrix::Zero(z.dim(), z.dim());
        for (size_t u = 0; u < mow->alice_povm.size(); ++u) {
            require_bob_effect(mow->bob_conditional[u]);
            if (!is_effect(mow->bob_conditional[u]))
                throw ValidationError("matched strategy: Bob branch effect invalid");
            acc += joint_effect(mow->alice_povm[u], mow->bob_conditional[u]).matrix();
        }
        return QuantumOperator(z.layout(), std::move(acc));
    }
    const auto& filt = std::get<Strategy::Filtered>(v);
    if (filt.inner == nullptr)
        throw ValidationError("filtered strategy: missing inner strategy");
    if (operator_norm(filt.filter_a0.matrix()) > 1.0 + filter_norm_tol ||
        operator_norm(filt.filter_b0.matrix()) > 1.0 + filter_norm_tol)
        throw ValidationError("filtered strategy: filters must be contractions");
    const QuantumOperator& z = filt.inner->effect();
    const auto& layout = z.layout();
    const QuantumOperator full = tensor(
        {QuantumOperator(SubsystemLayout::single(labels::a0, filt.filter_a0.dim()),
                         filt.filter_a0.matrix()),
         identity_on(labels::a, layout.dim_of(labels::a)),
         identity_on(labels::b, layout.dim_of(labels::b)),
         QuantumOperator(SubsystemLayout::single(labels::b0, filt.filter_b0.dim()),
                         filt.filter_b0.matrix())});
    if (full.dim() != z.dim())
        throw LayoutError("filtered strategy: filter dimensions do not match inner effect");
    return QuantumOperator(layout, full.matrix().adjoint() * z.matrix() * full.matrix());
}

} // namespace

Strategy::Strategy(Variant v) : variant_(std::move(v)), z11_(realize(variant_)) {}

Strategy product(QuantumOperator p, QuantumOperator q) {
    return Strategy(Strategy::Product{std::move(p), std::move(q)});
}

Strategy matched_one_way(std::vector<QuantumOperator> alice_povm,
                         std::vector<QuantumOperator> bob_conditional) {
    return Strategy(Strategy::MatchedOneWay{std::move(alice_povm), std::move(bob_conditional)});
}

Strategy bell_matched(const std::array<int, 4>& pairing) {
    std::array<bool, 4> seen{};
    for (int x : pairing) {
        if (x < 0 || x > 3 || seen[static_cast<size_t>(x)])
            throw ValidationError("bell_matched: pairing must be a permutation of 0..3");
        seen[static_cast<size_t>(x)] = true;
    }
    const SubsystemLayout alice = alice_effect_layout(2, 2);
    const SubsystemLayout bob = bob_effect_layout(2, 2);
    std::vector<QuantumOperator> povm, conditional;
    for (int u = 0; u < 4; ++u) {
        povm.emplace_back(alice, projector(bell_vector(static_cast<Bell>(u))));
        conditional.emplace_back(bob, projector(bell_vector(static_cast<Bell>(pairing[u]))));
    }
    return matched_one_way(std::move(povm), std::move(conditional));
}

FilterResult slocc_filter(const Vector& psi, const Vector& phi, Index dim_left,
                          Index dim_right) {
    const SchmidtForm source = schmidt_decompose(psi, dim_left, dim_right);
    const SchmidtForm target = schmidt_decompose(phi, dim_left, dim_right);
    const Index rank_source = source.rank();
    const Index rank_target = target.rank();
    if (rank_target > rank_source)
        throw InfeasibleError("slocc_filter: target Schmidt rank exceeds source rank");

    double c = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < rank_target; ++i) {
        const double mu = source.coefficients(i) * source.coefficients(i);
        const double nu = target.coefficients(i) * target.coefficients(i);
        c = std::min(c, std::sqrt(mu / nu));
    }

    FilterResult out;
    out.q = c * c;
    out.left = Matrix::Zero(dim_left, dim_left);
    out.right = Matrix::Zero(dim_right, dim_right);
    for (Index i = 0; i < rank_target; ++i) {
        const double ratio = target.coefficients(i) / source.coefficients(i);
        out.left += (c * ratio) * target.left_basis.col(i) * source.left_basis.col(i).adjoint();
        out.right += target.right_basis.col(i) * source.right_basis.col(i).adjoint();
    }
    return out;
}

Strategy filter_pullback(Strategy inner, const FilterResult& filter) {
    // The effect-side pullback conjugates by conj(left) (x) right on the
    // question slots; the conjugate comes from carrying the filter through
    // the partial transposition in the witness.
    const Index da0 = filter.left.rows();
    const Index db0 = filter.right.rows();
    QuantumOperator fa0(SubsystemLayout::single(labels::a0, da0),
                        filter.left.conjugate());
    QuantumOperator fb0(SubsystemLayout::single(labels::b0, db0), filter.right);
    return Strategy(Strategy::Filtered{std::move(fa0), std::move(fb0),
                                       std::make_shared<const Strategy>(std::move(inner))});
}

QuantumOperator channel_dual_pullback(
    const QuantumOperator& z,
    const std::vector<std::pair<QuantumOperator, QuantumOperator>>& kraus_pairs,
    const std::vector<double>& weights) {
    if (kraus_pairs.empty() || kraus_pairs.size() != weights.size())
        throw ValidationError("channel_dual_pullback: Kraus pairs and weights mismatch");
    double weight_sum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw ValidationError("channel_dual_pullback: negative weight");
        weight_sum += w;
    }
    if (std::abs(weight_sum - 1.0) > 1e-9)
        throw ValidationError("channel_dual_pullback: weights must sum to 1");

    Matrix acc = Matrix::Zero(z.dim(), z.dim());
    for (size_t j = 0; j < kraus_pairs.size(); ++j) {
        require_alice_effect(kraus_pairs[j].first);
        require_bob_effect(kraus_pairs[j].second);
        const Matrix f =
            permute_subsystems(tensor(kraus_pairs[j].first, kraus_pairs[j].second),
                               canonical_order())
                .matrix();
        if (f.rows() != z.dim())
            throw LayoutError("channel_dual_pullback: Kraus dimensions do not match effect");
        acc += weights[j] * (f.adjoint() * z.matrix() * f);
    }
    return QuantumOperator(z.layout(), std::move(acc));
}

} // namespace sqgame
