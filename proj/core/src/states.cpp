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

#include "sqgame/states.hpp"

#include <cmath>

namespace sqgame {

Vector bell_vector(Bell which) {
    const double s = 1.0 / std::sqrt(2.0);
    Vector v = Vector::Zero(4);
    switch (which) {
        case Bell::phi_plus:  v(0) = s; v(3) = s; break;
        case Bell::phi_minus: v(0) = s; v(3) = -s; break;
        case Bell::psi_plus:  v(1) = s; v(2) = s; break;
        case Bell::psi_minus: v(1) = s; v(2) = -s; break;
    }
    return v;
}

Vector maxent_vector(Index d) {
    if (d < 2) throw ValidationError("maxent_vector: dimension must be at least 2");
    Vector v = Vector::Zero(d * d);
    const double s = 1.0 / std::sqrt(static_cast<double>(d));
    for (Index i = 0; i < d; ++i) v(i * d + i) = s;
    return v;
}

Vector embedded_maxent_vector(Index dim_a, Index dim_b) {
    const Index d = std::min(dim_a, dim_b);
    if (d < 2) throw ValidationError("embedded_maxent_vector: dimensions must be at least 2");
    Vector v = Vector::Zero(dim_a * dim_b);
    const double s = 1.0 / std::sqrt(static_cast<double>(d));
    for (Index i = 0; i < d; ++i) v(i * dim_b + i) = s;
    return v;
}

Vector basis_vector(Index d, Index k) {
    if (k < 0 || k >= d) throw LayoutError("basis_vector: index out of range");
    Vector v = Vector::Zero(d);
    v(k) = 1.0;
    return v;
}

Matrix projector(const Vector& psi) { return psi * psi.adjoint(); }

QuantumOperator state_ab(const Matrix& rho, Index dim_a, Index dim_b) {
    SubsystemLayout layout({{labels::a, dim_a}, {labels::b, dim_b}});
    return QuantumOperator(std::move(layout), rho);
}

QuantumOperator pure_state_ab(const Vector& psi, Index dim_a, Index dim_b) {
    return state_ab(projector(psi), dim_a, dim_b);
}

QuantumOperator werner_state(double v) {
    if (v < 0.0 || v > 1.0) throw ValidationError("werner_state: v must be in [0, 1]");
    const Matrix rho =
        v * projector(bell_vector(Bell::phi_plus)) + (1.0 - v) * Matrix::Identity(4, 4) / 4.0;
    return state_ab(rho, 2, 2);
}

QuantumOperator question_state(const std::string& label, const Matrix& rho) {
    return QuantumOperator(SubsystemLayout::single(label, rho.rows()), rho);
}

} // namespace sqgame
