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

#include "sqgame/witness.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Cholesky>
#include <unsupported/Eigen/KroneckerProduct>
#include <limits>

#include "sqgame/rng.hpp"
#include "sqgame/states.hpp"

namespace sqgame {

namespace {

SubsystemLayout question_layout(Index dim_a0, Index dim_b0) {
    return SubsystemLayout({{labels::a0, dim_a0}, {labels::b0, dim_b0}});
}

constexpr double reconstruction_tol = 1e-9;

} // namespace

Witness decomposable_witness(const Vector& psi, Index dim_a0, Index dim_b0) {
    if (psi.size() != dim_a0 * dim_b0)
        throw LayoutError("decomposable_witness: vector length does not match dimensions");
    if (std::abs(psi.norm() - 1.0) > herm_tol)
        throw ValidationError("decomposable_witness: vector is not normalized");
    const SchmidtForm schmidt = schmidt_decompose(psi, dim_a0, dim_b0);
    if (schmidt.rank() < 2)
        throw ValidationError("decomposable_witness: vector is a product state (Schmidt rank 1)");

    const Index d = std::min(dim_a0, dim_b0);
    const QuantumOperator proj(question_layout(dim_a0, dim_b0), projector(psi));
    const QuantumOperator transposed = partial_transpose(proj, {labels::b0});

    Witness w{QuantumOperator(transposed.layout(),
                              -static_cast<double>(d) * transposed.matrix()),
              d, WitnessKind::decomposable, psi};
    return w;
}

Witness swap_witness(Index d) {
    if (d < 2) throw ValidationError("swap_witness: dimension must be at least 2");
    return decomposable_witness(maxent_vector(d), d, d);
}

Witness generic_witness(QuantumOperator op) {
    if (!op.layout().has(labels::a0) || !op.layout().has(labels::b0) || op.layout().size() != 2)
        throw LayoutError("generic_witness: operator must live on [A0, B0]");
    if (!is_hermitian(op.matrix()))
        throw ValidationError("generic_witness: operator is not Hermitian");
    const Index d = std::min(op.layout().dim_of(labels::a0), op.layout().dim_of(labels::b0));
    if (std::abs(op.trace().real() + static_cast<double>(d)) > herm_tol ||
        std::abs(op.trace().imag()) > herm_tol)
        throw ValidationError("generic_witness: trace must equal -min(d_A0, d_B0)");
    return Witness{std::move(op), d, WitnessKind::generic, std::nullopt};
}

double evaluate(const Witness& w, const QuantumOperator& rho) {
    if (rho.dim() != w.op.dim())
        throw LayoutError("evaluate: state dimension does not match witness");
    return (w.op.matrix() * rho.matrix()).trace().real();
}

BlockNegativityReport is_block_negative_sampled(const Witness& w, int n, std::uint64_t seed) {
    if (n < 1) throw ValidationError("is_block_negative_sampled: n must be positive");
    RngStream rng(seed);
    const Index da = w.dim_a0(), db = w.dim_b0();
    BlockNegativityReport report;
    report.worst_violation = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
        const Vector a = rng.haar_vector(da);
        const Vector b = rng.haar_vector(db);
        Vector ab(da * db);
        for (Index i = 0; i < da; ++i)
            for (Index j = 0; j < db; ++j) ab(i * db + j) = a(i) * b(j);
        const double value = (ab.adjoint() * w.op.matrix() * ab)(0).real();
        report.worst_violation = std::max(report.worst_violation, value);
    }
    report.block_negative = report.worst_violation <= psd_tol;
    return report;
}

// ---------------------------------------------------------------------------
// Product-basis decomposition
// ---------------------------------------------------------------------------

namespace {

// Informationally complete set of d^2 pure states per side: |k><k| for k < d,
// then projectors onto (|j>+|k>)/sqrt2 and (|j>+i|k>)/sqrt2 for j < k.
std::vector<Matrix> tomography_states(Index d) {
    std::vector<Matrix> states;
    states.reserve(static_cast<size_t>(d * d));
    for (Index k = 0; k < d; ++k) states.push_back(projector(basis_vector(d, k)));
    const double s = 1.0 / std::sqrt(2.0);
    for (Index j = 0; j < d; ++j)
        for (Index k = j + 1; k < d; ++k) {
            Vector v = Vector::Zero(d);
            v(j) = s;
            v(k) = s;
            states.push_back(projector(v));
        }
    for (Index j = 0; j < d; ++j)
        for (Index k = j + 1; k < d; ++k) {
            Vector v = Vector::Zero(d);
            v(j) = s;
            v(k) = Complex(0, 1) * s;
            states.push_back(projector(v));
        }
    return states;
}

// Gram matrix of the tomography set under the Hilbert-Schmidt pairing.
Eigen::MatrixXd gram(const std::vector<Matrix>& states) {
    const Index n = static_cast<Index>(states.size());
    Eigen::MatrixXd g(n, n);
    for (Index u = 0; u < n; ++u)
        for (Index v = 0; v < n; ++v)
            g(u, v) = (states[static_cast<size_t>(u)] * states[static_cast<size_t>(v)])
                          .trace()
                          .real();
    return g;
}

} // namespace

QuestionEnsemble decompose_product_ensemble(const Witness& w) {
    const Index da = w.dim_a0(), db = w.dim_b0();
    if (da > 8 || db > 8)
        throw LayoutError("decompose_product_ensemble: question dimensions above 8 unsupported");

    const auto tau = tomography_states(da);
    const auto omega = tomography_states(db);
    const Index na = static_cast<Index>(tau.size());
    const Index nb = static_cast<Index>(omega.size());
    const Matrix& wm = w.op.matrix();

    // Target pairings t_{uv} = Tr[(tau_u^T (x) omega_v^T) W]. The product set
    // is a basis of the Hermitian operators, so the coefficients solve
    // (G_A (x) G_B) beta = t; factorize per side instead of forming the
    // Kronecker system.
    Eigen::MatrixXd t(na, nb);
    for (Index u = 0; u < na; ++u) {
        const Matrix tau_t = tau[static_cast<size_t>(u)].transpose();
        for (Index v = 0; v < nb; ++v) {
            const Matrix omega_t = omega[static_cast<size_t>(v)].transpose();
            Complex acc(0, 0);
            for (Index i = 0; i < da; ++i)
                for (Index ip = 0; ip < da; ++ip)
                    for (Index j = 0; j < db; ++j)
                        for (Index jp = 0; jp < db; ++jp)
                            acc += tau_t(i, ip) * omega_t(j, jp) * wm(ip * db + jp, i * db + j);
            t(u, v) = acc.real();
        }
    }

    const Eigen::LDLT<Eigen::MatrixXd> ga(gram(tau));
    const Eigen::LDLT<Eigen::MatrixXd> gb(gram(omega));
    if (ga.info() != Eigen::Success || gb.info() != Eigen::Success)
        throw ValidationError("decompose_product_ensemble: singular decomposition basis");
    const Eigen::MatrixXd beta = gb.solve(ga.solve(t).transpose()).transpose();

    double beta_norm = 0.0;
    for (Index u = 0; u < na; ++u)
        for (Index v = 0; v < nb; ++v) beta_norm += std::abs(beta(u, v));
    const double drop_tol = 1e-12 * std::max(1.0, beta_norm);

    QuestionEnsemble ensemble;
    for (Index u = 0; u < na; ++u)
        for (Index v = 0; v < nb; ++v) {
            const double b = beta(u, v);
            if (std::abs(b) <= drop_tol) continue;
            ensemble.items.push_back(QuestionItem{
                std::abs(b) / beta_norm, b,
                question_state(labels::a0, tau[static_cast<size_t>(u)]),
                question_state(labels::b0, omega[static_cast<size_t>(v)])});
        }
    if (ensemble.items.empty())
        throw ValidationError("decompose_product_ensemble: witness decomposed to zero");

    const QuantumOperator rebuilt = reconstruct(ensemble);
    if ((rebuilt.matrix() - wm).cwiseAbs().maxCoeff() > reconstruction_tol)
        throw ValidationError("decompose_product_ensemble: reconstruction residual too large");
    return ensemble;
}

QuantumOperator reconstruct(const QuestionEnsemble& ensemble) {
    if (ensemble.items.empty())
        throw ValidationError("reconstruct: empty ensemble");
    const auto& first = ensemble.items.front();
    const Index da = first.tau.dim(), db = first.omega.dim();
    Matrix sum = Matrix::Zero(da * db, da * db);
    for (const auto& item : ensemble.items) {
        const Matrix prod = Eigen::kroneckerProduct(item.tau.matrix().transpose(),
                                                    item.omega.matrix().transpose());
        sum += item.beta * prod;
    }
    return QuantumOperator(question_layout(da, db), std::move(sum));
}

} // namespace sqgame
