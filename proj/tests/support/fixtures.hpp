// Shared generators and frozen reference matrices for the test suites.

#pragma once

#include <vector>

#include <sqgame/oracle.hpp>
#include <sqgame/rng.hpp>
#include <sqgame/states.hpp>
#include <sqgame/witness.hpp>

namespace fixtures {

using namespace sqgame;

// W from |Psi->: -2 |Psi-><Psi-|^(T_B) = 2 |Phi+><Phi+| - I, written out by
// hand in the basis |00>,|01>,|10>,|11>.
inline Matrix wde_matrix() {
    Matrix w(4, 4);
    w << 0, 0, 0, 1,
         0, -1, 0, 0,
         0, 0, -1, 0,
         1, 0, 0, 0;
    return w;
}

inline Witness wde() { return decomposable_witness(bell_vector(Bell::psi_minus), 2, 2); }

// SWAP on C^2 (x) C^2 by index permutation.
inline Matrix swap4() {
    Matrix s = Matrix::Zero(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) s(i * 2 + j, j * 2 + i) = 1.0;
    return s;
}

// Random density operator: Dirichlet-weighted mixture of Haar pure states.
inline Matrix random_density(RngStream& rng, Index dim, int terms = 4) {
    const auto w = rng.dirichlet(static_cast<std::size_t>(terms));
    Matrix rho = Matrix::Zero(dim, dim);
    for (int t = 0; t < terms; ++t) {
        const Vector v = rng.haar_vector(dim);
        rho += w[static_cast<std::size_t>(t)] * (v * v.adjoint());
    }
    return rho;
}

inline QuantumOperator random_state_ab(RngStream& rng, Index da, Index db, int terms = 4) {
    return state_ab(random_density(rng, da * db, terms), da, db);
}

// Haar vectors have full Schmidt rank almost surely; retry to be safe.
inline Vector random_entangled_vector(RngStream& rng, Index da, Index db) {
    for (;;) {
        const Vector v = rng.haar_vector(da * db);
        if (schmidt_decompose(v, da, db).rank() == std::min(da, db)) return v;
    }
}

// Random CPTP channel on C^dim as Kraus operators (Ginibre, normalized).
inline std::vector<Matrix> random_cptp(RngStream& rng, Index dim, int kraus = 2) {
    std::vector<Matrix> g;
    Matrix s = Matrix::Zero(dim, dim);
    for (int k = 0; k < kraus; ++k) {
        Matrix m(dim, dim);
        for (Index i = 0; i < dim; ++i)
            for (Index j = 0; j < dim; ++j) m(i, j) = rng.complex_normal();
        g.push_back(m);
        s += m.adjoint() * m;
    }
    const Eigensystem es = eig_hermitian(s);
    Matrix inv_sqrt = Matrix::Zero(dim, dim);
    for (Index k = 0; k < dim; ++k)
        inv_sqrt += es.vectors.col(k) * es.vectors.col(k).adjoint() / std::sqrt(es.values(k));
    for (auto& m : g) m = m * inv_sqrt;
    return g;
}

// Apply a product channel (Kraus lists per side) to a state on [A, B].
inline QuantumOperator apply_local_channel(const QuantumOperator& rho,
                                           const std::vector<Matrix>& kraus_a,
                                           const std::vector<Matrix>& kraus_b) {
    const Index da = rho.layout().dim_of(labels::a);
    const Index db = rho.layout().dim_of(labels::b);
    Matrix out = Matrix::Zero(da * db, da * db);
    for (const auto& ka : kraus_a)
        for (const auto& kb : kraus_b) {
            Matrix k(da * db, da * db);
            for (Index i = 0; i < da; ++i)
                for (Index j = 0; j < db; ++j)
                    for (Index ip = 0; ip < da; ++ip)
                        for (Index jp = 0; jp < db; ++jp)
                            k(i * db + j, ip * db + jp) = ka(i, ip) * kb(j, jp);
            out += k * rho.matrix() * k.adjoint();
        }
    return state_ab(out, da, db);
}

} // namespace fixtures
