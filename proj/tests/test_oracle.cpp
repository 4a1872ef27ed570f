#include <doctest.h>

#include <cmath>

#include <sqgame/optimize.hpp>
#include <sqgame/oracle.hpp>
#include <sqgame/states.hpp>

#include "support/fixtures.hpp"

using namespace sqgame;

TEST_CASE("ppt_min_eigenvalue: frozen values and the Werner closed form") {
    CHECK(ppt_min_eigenvalue(pure_state_ab(bell_vector(Bell::phi_plus), 2, 2)) ==
          doctest::Approx(-0.5).epsilon(1e-12));

    Matrix zz = Matrix::Zero(4, 4);
    zz(0, 0) = 1.0;
    CHECK(std::abs(ppt_min_eigenvalue(state_ab(zz, 2, 2))) < 1e-12);

    for (double v = 0.0; v <= 1.0 + 1e-12; v += 0.125)
        CHECK(ppt_min_eigenvalue(werner_state(std::min(v, 1.0))) ==
              doctest::Approx((1.0 - 3.0 * v) / 4.0).epsilon(1e-12));
}

TEST_CASE("negativity: frozen values, separables, Werner branch") {
    CHECK(negativity(pure_state_ab(bell_vector(Bell::phi_plus), 2, 2)) ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(negativity(sample_separable(2, 2, 6, 3)) < 1e-10);
    for (double v : {0.5, 0.75, 1.0})
        CHECK(negativity(werner_state(v)) ==
              doctest::Approx((3.0 * v - 1.0) / 4.0).epsilon(1e-10));
    CHECK(negativity(werner_state(0.25)) < 1e-10);
}

TEST_CASE("negativity vanishes exactly on the PPT side") {
    RngStream rng(5);
    for (int t = 0; t < 100; ++t) {
        const QuantumOperator rho = fixtures::random_state_ab(rng, 2, 2, t % 5 + 1);
        const bool zero_negativity = negativity(rho) < 1e-12;
        const bool ppt = ppt_min_eigenvalue(rho) >= -1e-9;
        CHECK(zero_negativity == ppt);
    }
}

TEST_CASE("negativity of pure states matches the Schmidt closed form") {
    RngStream rng(7);
    for (int t = 0; t < 200; ++t) {
        const Index db = (t % 2 == 0) ? 2 : 3;
        const Vector psi = rng.haar_vector(2 * db);
        const SchmidtForm sf = schmidt_decompose(psi, 2, db);
        const double coeff_sum = sf.coefficients.sum();
        const double expected = (coeff_sum * coeff_sum - 1.0) / 2.0;
        CHECK(negativity(pure_state_ab(psi, 2, db)) ==
              doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("optimal_decomposable_witness: Bell detection and PPT refusal") {
    const DetectionResult plus =
        optimal_decomposable_witness(pure_state_ab(bell_vector(Bell::phi_plus), 2, 2));
    CHECK(plus.detection_value == doctest::Approx(1.0).epsilon(1e-10));
    const DetectionResult minus =
        optimal_decomposable_witness(pure_state_ab(bell_vector(Bell::phi_minus), 2, 2));
    CHECK(minus.detection_value == doctest::Approx(1.0).epsilon(1e-10));

    Matrix zz = Matrix::Zero(4, 4);
    zz(0, 0) = 1.0;
    CHECK_THROWS_AS(optimal_decomposable_witness(state_ab(zz, 2, 2)), InfeasibleError);
}

TEST_CASE("sample_separable: PPT, normalized, pure products at one term") {
    for (int t = 0; t < 20; ++t) {
        const QuantumOperator sigma = sample_separable(2, 3, 4, 100 + t);
        CHECK(ppt_min_eigenvalue(sigma) >= -1e-10);
        CHECK(sigma.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(is_state(sigma));
    }
    const QuantumOperator pure = sample_separable(2, 2, 1, 42);
    CHECK((pure.matrix() * pure.matrix()).trace().real() ==
          doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("brute_force_payoff: bounded by the spectral bound and the see-saw") {
    const Witness w = fixtures::wde();
    SeesawOptions opts;
    opts.seed = 11;

    Matrix zz = Matrix::Zero(4, 4);
    zz(0, 0) = 1.0;
    CHECK(brute_force_payoff(w, state_ab(zz, 2, 2), 400, 1) <= 1e-9);

    RngStream rng(13);
    for (int t = 0; t < 10; ++t) {
        const QuantumOperator rho = fixtures::random_state_ab(rng, 2, 2);
        const double brute = brute_force_payoff(w, rho, 200, 17 + t);
        CHECK(brute <= upper_bound_global(w, rho) + 1e-12);
        const double seesaw = seesaw_matched(w, rho, opts).value;
        CHECK(brute <= seesaw + 1e-9);
    }

    const QuantumOperator phi = pure_state_ab(bell_vector(Bell::phi_plus), 2, 2);
    CHECK(brute_force_payoff(w, phi, 2000, 23) > 0.5); // rotated Bell bases get close
}

TEST_CASE("majorizes: order facts") {
    CHECK(majorizes({0.5, 0.5}, {0.8, 0.2}));
    CHECK_FALSE(majorizes({0.8, 0.2}, {0.5, 0.5}));
    CHECK(majorizes({0.3, 0.7}, {0.3, 0.7}));
    CHECK(majorizes({0.25, 0.25, 0.25, 0.25}, {0.7, 0.1, 0.1, 0.1}));
    CHECK(majorizes({1.0 / 3, 1.0 / 3, 1.0 / 3}, {0.5, 0.5})); // zero padding
    CHECK_THROWS_AS(majorizes({0.5, 0.2}, {0.5, 0.5}), ValidationError);

    RngStream rng(17);
    for (int t = 0; t < 50; ++t) {
        auto x = rng.dirichlet(4);
        auto y = rng.dirichlet(4);
        auto z = rng.dirichlet(4);
        CHECK(majorizes(x, x));
        if (majorizes(x, y) && majorizes(y, z)) CHECK(majorizes(x, z));
        CHECK(majorizes({0.25, 0.25, 0.25, 0.25}, x));
    }
}
