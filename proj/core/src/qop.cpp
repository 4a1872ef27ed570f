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

#include "sqgame/qop.hpp"

#include <algorithm>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

namespace sqgame {

namespace {

// Row-major strides for a list of subsystem dimensions.
std::vector<Index> strides_of(const std::vector<Index>& dims) {
    std::vector<Index> s(dims.size(), 1);
    for (size_t k = dims.size(); k-- > 1;) s[k - 1] = s[k] * dims[k];
    return s;
}

// digits[i * n + k] = k-th subsystem index of flat basis index i.
std::vector<Index> digit_table(const std::vector<Index>& dims, Index total) {
    const size_t n = dims.size();
    const auto strides = strides_of(dims);
    std::vector<Index> digits(static_cast<size_t>(total) * std::max<size_t>(n, 1));
    for (Index i = 0; i < total; ++i)
        for (size_t k = 0; k < n; ++k)
            digits[static_cast<size_t>(i) * n + k] = (i / strides[k]) % dims[k];
    return digits;
}

} // namespace

QuantumOperator::QuantumOperator(SubsystemLayout layout, Matrix data)
    : layout_(std::move(layout)), mat_(std::move(data)) {
    if (mat_.rows() != mat_.cols())
        throw LayoutError("operator: matrix is not square");
    if (mat_.rows() != layout_.total_dim())
        throw LayoutError("operator: matrix side " + std::to_string(mat_.rows()) +
                          " does not match layout dimension " +
                          std::to_string(layout_.total_dim()));
}

StateVector::StateVector(SubsystemLayout l, Vector a) : layout(std::move(l)), amp(std::move(a)) {
    if (amp.size() != layout.total_dim())
        throw LayoutError("state vector: length " + std::to_string(amp.size()) +
                          " does not match layout dimension " +
                          std::to_string(layout.total_dim()));
}

// ---------------------------------------------------------------------------
// Predicates
// ---------------------------------------------------------------------------

bool is_hermitian(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return (m - m.adjoint()).cwiseAbs().maxCoeff() < tol;
}

bool is_psd(const Matrix& m, double tol) {
    if (!is_hermitian(m)) return false;
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tol;
}

bool is_state(const Matrix& m, double tol) {
    return is_psd(m) && std::abs(m.trace().real() - 1.0) < tol &&
           std::abs(m.trace().imag()) < tol;
}

bool is_effect(const Matrix& m) {
    if (!is_hermitian(m)) return false;
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -psd_tol &&
           es.eigenvalues().maxCoeff() <= 1.0 + psd_tol;
}

double operator_norm(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues()(0);
}

// ---------------------------------------------------------------------------
// Tensor products
// ---------------------------------------------------------------------------

QuantumOperator tensor(const std::vector<QuantumOperator>& factors) {
    if (factors.empty())
        throw LayoutError("tensor: needs at least one factor");
    SubsystemLayout layout = factors.front().layout();
    Matrix m = factors.front().matrix();
    for (size_t k = 1; k < factors.size(); ++k) {
        layout = concat(layout, factors[k].layout());
        m = Eigen::kroneckerProduct(m, factors[k].matrix()).eval();
    }
    return QuantumOperator(std::move(layout), std::move(m));
}

QuantumOperator tensor(const QuantumOperator& a, const QuantumOperator& b) {
    return tensor(std::vector<QuantumOperator>{a, b});
}

QuantumOperator tensor(const QuantumOperator& a, const QuantumOperator& b,
                       const QuantumOperator& c) {
    return tensor(std::vector<QuantumOperator>{a, b, c});
}

QuantumOperator identity_on(const std::string& label, Index dim) {
    return QuantumOperator(SubsystemLayout::single(label, dim), Matrix::Identity(dim, dim));
}

// ---------------------------------------------------------------------------
// Rearrangement
// ---------------------------------------------------------------------------

namespace {

// Flat-index translation old -> new for reordering subsystems by `perm`,
// where perm[k] is the old position of the k-th new subsystem.
std::vector<Index> permutation_map(const std::vector<Index>& old_dims,
                                   const std::vector<Index>& perm, Index total) {
    const size_t n = old_dims.size();
    std::vector<Index> new_dims(n);
    for (size_t k = 0; k < n; ++k) new_dims[k] = old_dims[static_cast<size_t>(perm[k])];
    const auto old_digits = digit_table(old_dims, total);
    const auto new_strides = strides_of(new_dims);
    std::vector<Index> map(static_cast<size_t>(total));
    for (Index i = 0; i < total; ++i) {
        Index f = 0;
        for (size_t k = 0; k < n; ++k)
            f += old_digits[static_cast<size_t>(i) * n + static_cast<size_t>(perm[k])] *
                 new_strides[k];
        map[static_cast<size_t>(i)] = f;
    }
    return map;
}

std::vector<Index> resolve_order(const SubsystemLayout& layout,
                                 const std::vector<std::string>& new_order) {
    if (static_cast<Index>(new_order.size()) != layout.size())
        throw LayoutError("permute: order must list every subsystem exactly once");
    std::vector<Index> perm;
    perm.reserve(new_order.size());
    std::vector<bool> used(new_order.size(), false);
    for (const auto& label : new_order) {
        const Index pos = layout.position(label);
        if (used[static_cast<size_t>(pos)])
            throw LayoutError("permute: label '" + label + "' listed twice");
        used[static_cast<size_t>(pos)] = true;
        perm.push_back(pos);
    }
    return perm;
}

SubsystemLayout permuted_layout(const SubsystemLayout& layout, const std::vector<Index>& perm) {
    std::vector<Subsystem> entries;
    entries.reserve(perm.size());
    for (Index p : perm) entries.push_back(layout.at(p));
    return SubsystemLayout(std::move(entries));
}

} // namespace

QuantumOperator permute_subsystems(const QuantumOperator& op,
                                   const std::vector<std::string>& new_order) {
    const auto perm = resolve_order(op.layout(), new_order);
    const Index total = op.dim();
    const auto map = permutation_map(op.layout().dim_list(), perm, total);
    Matrix out(total, total);
    const Matrix& in = op.matrix();
    for (Index i = 0; i < total; ++i)
        for (Index j = 0; j < total; ++j)
            out(map[static_cast<size_t>(i)], map[static_cast<size_t>(j)]) = in(i, j);
    return QuantumOperator(permuted_layout(op.layout(), perm), std::move(out));
}

StateVector permute_subsystems(const StateVector& vec,
                               const std::vector<std::string>& new_order) {
    const auto perm = resolve_order(vec.layout, new_order);
    const Index total = vec.dim();
    const auto map = permutation_map(vec.layout.dim_list(), perm, total);
    Vector out(total);
    for (Index i = 0; i < total; ++i) out(map[static_cast<size_t>(i)]) = vec.amp(i);
    return StateVector(permuted_layout(vec.layout, perm), std::move(out));
}

QuantumOperator partial_trace(const QuantumOperator& op,
                              const std::vector<std::string>& keep) {
    const auto& layout = op.layout();
    std::vector<bool> kept(static_cast<size_t>(layout.size()), false);
    for (const auto& label : keep) kept[static_cast<size_t>(layout.position(label))] = true;

    std::vector<Subsystem> kept_entries, traced_entries;
    std::vector<Index> kept_pos, traced_pos;
    for (Index k = 0; k < layout.size(); ++k) {
        if (kept[static_cast<size_t>(k)]) {
            kept_entries.push_back(layout.at(k));
            kept_pos.push_back(k);
        } else {
            traced_entries.push_back(layout.at(k));
            traced_pos.push_back(k);
        }
    }

    SubsystemLayout out_layout(kept_entries);
    const Index out_dim = out_layout.total_dim();
    Index traced_dim = 1;
    for (const auto& e : traced_entries) traced_dim *= e.dim;

    const auto dims = layout.dim_list();
    const auto strides = strides_of(dims);
    const auto out_digits = digit_table(out_layout.dim_list(), out_dim);
    std::vector<Index> traced_dims;
    for (const auto& e : traced_entries) traced_dims.push_back(e.dim);
    const auto traced_digits = digit_table(traced_dims, traced_dim);

    // Base offsets of the kept part within the full flat index.
    std::vector<Index> kept_offset(static_cast<size_t>(out_dim), 0);
    for (Index i = 0; i < out_dim; ++i)
        for (size_t k = 0; k < kept_pos.size(); ++k)
            kept_offset[static_cast<size_t>(i)] +=
                out_digits[static_cast<size_t>(i) * kept_pos.size() + k] *
                strides[static_cast<size_t>(kept_pos[k])];
    std::vector<Index> traced_offset(static_cast<size_t>(traced_dim), 0);
    for (Index t = 0; t < traced_dim; ++t)
        for (size_t k = 0; k < traced_pos.size(); ++k)
            traced_offset[static_cast<size_t>(t)] +=
                traced_digits[static_cast<size_t>(t) * traced_pos.size() + k] *
                strides[static_cast<size_t>(traced_pos[k])];

    Matrix out = Matrix::Zero(out_dim, out_dim);
    const Matrix& in = op.matrix();
    for (Index i = 0; i < out_dim; ++i)
        for (Index j = 0; j < out_dim; ++j) {
            Complex sum(0, 0);
            for (Index t = 0; t < traced_dim; ++t)
                sum += in(kept_offset[static_cast<size_t>(i)] + traced_offset[static_cast<size_t>(t)],
                          kept_offset[static_cast<size_t>(j)] + traced_offset[static_cast<size_t>(t)]);
            out(i, j) = sum;
        }
    return QuantumOperator(std::move(out_layout), std::move(out));
}

QuantumOperator partial_transpose(const QuantumOperator& op,
                                  const std::vector<std::string>& on) {
    const auto& layout = op.layout();
    std::vector<bool> flip(static_cast<size_t>(layout.size()), false);
    for (const auto& label : on) flip[static_cast<size_t>(layout.position(label))] = true;

    const auto dims = layout.dim_list();
    const auto strides = strides_of(dims);
    const Index total = op.dim();
    const size_t n = dims.size();
    const auto digits = digit_table(dims, total);

    // Split each flat index into its transposed and untouched contributions.
    std::vector<Index> moved(static_cast<size_t>(total), 0), fixed(static_cast<size_t>(total), 0);
    for (Index i = 0; i < total; ++i)
        for (size_t k = 0; k < n; ++k) {
            const Index contrib = digits[static_cast<size_t>(i) * n + k] * strides[k];
            (flip[k] ? moved : fixed)[static_cast<size_t>(i)] += contrib;
        }

    Matrix out(total, total);
    const Matrix& in = op.matrix();
    for (Index i = 0; i < total; ++i)
        for (Index j = 0; j < total; ++j)
            out(fixed[static_cast<size_t>(i)] + moved[static_cast<size_t>(j)],
                fixed[static_cast<size_t>(j)] + moved[static_cast<size_t>(i)]) = in(i, j);
    return QuantumOperator(layout, std::move(out));
}

// ---------------------------------------------------------------------------
// Spectral decompositions
// ---------------------------------------------------------------------------

Eigensystem eig_hermitian(const Matrix& h) {
    if (h.rows() != h.cols() || (h - h.adjoint()).cwiseAbs().maxCoeff() >= herm_tol)
        throw ValidationError("eig_hermitian: input is not Hermitian within tolerance");
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    if (es.info() != Eigen::Success)
        throw ValidationError("eig_hermitian: eigensolver failed to converge");
    // Eigen sorts ascending; flip to descending.
    const Index d = h.rows();
    Eigensystem out;
    out.values = es.eigenvalues().reverse();
    out.vectors = Matrix(d, d);
    for (Index k = 0; k < d; ++k) out.vectors.col(k) = es.eigenvectors().col(d - 1 - k);
    return out;
}

Eigensystem eig_hermitian(const QuantumOperator& op) { return eig_hermitian(op.matrix()); }

PositivePart positive_part(const Matrix& h) {
    const Eigensystem es = eig_hermitian(h);
    PositivePart out;
    out.projector = Matrix::Zero(h.rows(), h.cols());
    for (Index k = 0; k < es.values.size(); ++k) {
        if (es.values(k) > 0.0) {
            out.projector += es.vectors.col(k) * es.vectors.col(k).adjoint();
            out.weight += es.values(k);
        }
    }
    return out;
}

std::pair<QuantumOperator, double> positive_part(const QuantumOperator& op) {
    PositivePart pp = positive_part(op.matrix());
    return {QuantumOperator(op.layout(), std::move(pp.projector)), pp.weight};
}

// ---------------------------------------------------------------------------
// Schmidt decomposition
// ---------------------------------------------------------------------------

Index SchmidtForm::rank(double tol) const {
    Index r = 0;
    for (Index k = 0; k < coefficients.size(); ++k)
        if (coefficients(k) > tol) ++r;
    return r;
}

Vector SchmidtForm::reconstruct() const {
    const Index dl = left_basis.rows(), dr = right_basis.rows();
    Vector out = Vector::Zero(dl * dr);
    for (Index k = 0; k < coefficients.size(); ++k)
        for (Index a = 0; a < dl; ++a)
            for (Index b = 0; b < dr; ++b)
                out(a * dr + b) += coefficients(k) * left_basis(a, k) * right_basis(b, k);
    return out;
}

SchmidtForm schmidt_decompose(const Vector& vec, Index dim_left, Index dim_right) {
    if (dim_left * dim_right != vec.size())
        throw LayoutError("schmidt: split dimensions do not match vector length");
    if (std::abs(vec.norm() - 1.0) > herm_tol)
        throw ValidationError("schmidt: input vector is not normalized");
    Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
        m(vec.data(), dim_left, dim_right);
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    SchmidtForm out;
    out.coefficients = svd.singularValues();
    out.left_basis = svd.matrixU();
    // psi = sum_k s_k u_k (x) conj(v_k) for M = U S V^dag.
    out.right_basis = svd.matrixV().conjugate();
    return out;
}

SchmidtForm schmidt_decompose(const StateVector& vec,
                              const std::vector<std::string>& left,
                              const std::vector<std::string>& right) {
    std::vector<std::string> order = left;
    order.insert(order.end(), right.begin(), right.end());
    const StateVector arranged = permute_subsystems(vec, order);
    Index dl = 1, dr = 1;
    for (const auto& label : left) dl *= vec.layout.dim_of(label);
    for (const auto& label : right) dr *= vec.layout.dim_of(label);
    return schmidt_decompose(arranged.amp, dl, dr);
}

} // namespace sqgame
