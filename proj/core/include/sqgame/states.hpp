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

#include <array>
#include <string>

#include "sqgame/qop.hpp"

namespace sqgame {

// Named two-qubit Bell vectors, indexed 0..3.
enum class Bell { phi_plus = 0, phi_minus = 1, psi_plus = 2, psi_minus = 3 };

inline constexpr std::array<const char*, 4> bell_names = {"phi+", "phi-", "psi+", "psi-"};

/// Bell vector on C^2 (x) C^2 in row-major basis order |00>,|01>,|10>,|11>.
Vector bell_vector(Bell which);

/// Maximally entangled vector (1/sqrt d) sum_i |i,i> on C^d (x) C^d.
Vector maxent_vector(Index d);

/// (1/sqrt D) sum_{i<D} |i,i> on C^da (x) C^db with D = min(da, db); the
/// canonical full-Schmidt-rank vector on asymmetric dimensions.
Vector embedded_maxent_vector(Index dim_a, Index dim_b);

/// Computational basis vector |k> in C^d.
Vector basis_vector(Index d, Index k);

/// Projector |psi><psi| as a plain matrix.
Matrix projector(const Vector& psi);

/// Shared two-qubit state rho on labels [A, B].
QuantumOperator state_ab(const Matrix& rho, Index dim_a, Index dim_b);
/// Pure shared state |psi><psi| on labels [A, B].
QuantumOperator pure_state_ab(const Vector& psi, Index dim_a, Index dim_b);

/// Werner state v |Phi+><Phi+| + (1 - v) I/4 on labels [A, B]; entangled
/// exactly when v > 1/3.
QuantumOperator werner_state(double v);

/// Question states on a single labeled slot.
QuantumOperator question_state(const std::string& label, const Matrix& rho);

} // namespace sqgame
