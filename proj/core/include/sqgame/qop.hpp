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

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "sqgame/layout.hpp"

namespace sqgame {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Numerical tolerances used throughout. Double-precision eigensolvers on
// side <= 4096 stay well inside these bounds.
inline constexpr double herm_tol = 1e-10;
inline constexpr double psd_tol = 1e-9;
inline constexpr double schmidt_rank_tol = 1e-12;

/// Dense complex operator on an ordered list of labeled subsystems. The same
/// type carries states, effects and witnesses; Hermiticity, positivity and
/// unit trace are checked predicates, not structural guarantees.
class QuantumOperator {
public:
    /// The trivial scalar operator (empty layout, 1x1 zero matrix).
    QuantumOperator() : mat_(Matrix::Zero(1, 1)) {}
    QuantumOperator(SubsystemLayout layout, Matrix data);

    const SubsystemLayout& layout() const { return layout_; }
    const Matrix& matrix() const { return mat_; }
    Index dim() const { return mat_.rows(); }

    Complex trace() const { return mat_.trace(); }

private:
    SubsystemLayout layout_;
    Matrix mat_;
};

/// Pure-state amplitudes on a labeled layout.
struct StateVector {
    SubsystemLayout layout;
    Vector amp;

    StateVector(SubsystemLayout l, Vector a);
    Index dim() const { return amp.size(); }
};

// ---------------------------------------------------------------------------
// Elementary predicates (matrix level)
// ---------------------------------------------------------------------------

bool is_hermitian(const Matrix& m, double tol = herm_tol);
bool is_psd(const Matrix& m, double tol = psd_tol);
/// Density operator: Hermitian, PSD, unit trace.
bool is_state(const Matrix& m, double tol = herm_tol);
/// POVM element: Hermitian with spectrum in [-psd_tol, 1 + psd_tol].
bool is_effect(const Matrix& m);
/// Largest singular value (= largest |eigenvalue| for Hermitian input).
double operator_norm(const Matrix& m);

inline bool is_state(const QuantumOperator& op, double tol = herm_tol) {
    return is_state(op.matrix(), tol);
}
inline bool is_effect(const QuantumOperator& op) { return is_effect(op.matrix()); }

// ---------------------------------------------------------------------------
// Tensor-product assembly and rearrangement
// ---------------------------------------------------------------------------

/// Kronecker product in factor order; layouts concatenate. Throws LayoutError
/// when factor labels collide.
QuantumOperator tensor(const std::vector<QuantumOperator>& factors);
QuantumOperator tensor(const QuantumOperator& a, const QuantumOperator& b);
QuantumOperator tensor(const QuantumOperator& a, const QuantumOperator& b,
                       const QuantumOperator& c);

/// Re-index to a new subsystem order (a permutation of the current labels).
/// Pure relabeling: applying the inverse order restores the input exactly.
QuantumOperator permute_subsystems(const QuantumOperator& op,
                                   const std::vector<std::string>& new_order);
StateVector permute_subsystems(const StateVector& vec,
                               const std::vector<std::string>& new_order);

/// Trace out everything not in `keep` (original relative order retained).
/// An empty `keep` yields a 1x1 scalar operator.
QuantumOperator partial_trace(const QuantumOperator& op,
                              const std::vector<std::string>& keep);

/// Transpose the indices of the subsystems in `on`. Involution; preserves
/// trace and Frobenius norm.
QuantumOperator partial_transpose(const QuantumOperator& op,
                                  const std::vector<std::string>& on);

/// Identity operator on a single labeled subsystem.
QuantumOperator identity_on(const std::string& label, Index dim);

// ---------------------------------------------------------------------------
// Spectral decompositions
// ---------------------------------------------------------------------------

/// Hermitian eigendecomposition with eigenvalues sorted descending and the
/// matching orthonormal eigenvectors as columns.
struct Eigensystem {
    RealVector values;
    Matrix vectors;
};

/// Throws ValidationError when max |H - H^dag| entry >= herm_tol.
Eigensystem eig_hermitian(const Matrix& h);
Eigensystem eig_hermitian(const QuantumOperator& op);

/// Projector onto the positive eigenspace together with the sum of positive
/// eigenvalues. The weight is the maximum of Tr(E h) over effects 0 <= E <= I.
struct PositivePart {
    Matrix projector;
    double weight = 0.0;
};

PositivePart positive_part(const Matrix& h);
/// Operator-level variant; the projector inherits the input layout.
std::pair<QuantumOperator, double> positive_part(const QuantumOperator& op);

// ---------------------------------------------------------------------------
// Schmidt decomposition
// ---------------------------------------------------------------------------

/// Bipartite Schmidt data: descending nonnegative coefficients with unit
/// square sum, plus orthonormal left/right bases as matrix columns. The input
/// reconstructs as sum_i c_i |l_i> (x) |r_i>.
struct SchmidtForm {
    RealVector coefficients;
    Matrix left_basis;
    Matrix right_basis;

    Index rank(double tol = schmidt_rank_tol) const;
    /// sum_i c_i |l_i> (x) |r_i>.
    Vector reconstruct() const;
};

/// Split a unit vector across (left labels | right labels). Throws
/// ValidationError when the norm deviates from 1 by more than herm_tol.
SchmidtForm schmidt_decompose(const StateVector& vec,
                              const std::vector<std::string>& left,
                              const std::vector<std::string>& right);
/// Plain bipartite split of a flat vector with row-major index (left, right).
SchmidtForm schmidt_decompose(const Vector& vec, Index dim_left, Index dim_right);

} // namespace sqgame
