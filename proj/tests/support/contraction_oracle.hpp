// Independent ground truth for reward evaluations. Everything here works on
// raw matrices with explicit eight-fold index loops; none of the library's
// tensor, permutation or layout machinery is used, so agreement between the
// two is a meaningful check.

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace oracle_support {

using Cx = std::complex<double>;
using Mat = Eigen::MatrixXcd;

// Tr[(P (x) Q)(tau (x) rho (x) omega)] where P acts on (A, A0) row-major,
// Q on (B0, B), tau on A0, rho on (A, B), omega on B0.
inline Cx contract_reward(const Mat& p, const Mat& q, const Mat& tau, const Mat& rho,
                          const Mat& omega, int da, int da0, int db0, int db) {
    Cx total(0, 0);
    for (int a0 = 0; a0 < da0; ++a0)
        for (int a = 0; a < da; ++a)
            for (int b = 0; b < db; ++b)
                for (int b0 = 0; b0 < db0; ++b0)
                    for (int a0p = 0; a0p < da0; ++a0p)
                        for (int ap = 0; ap < da; ++ap)
                            for (int bp = 0; bp < db; ++bp)
                                for (int b0p = 0; b0p < db0; ++b0p)
                                    total += p(a * da0 + a0, ap * da0 + a0p) *
                                             q(b0 * db + b, b0p * db + bp) *
                                             tau(a0p, a0) *
                                             rho(ap * db + bp, a * db + b) *
                                             omega(b0p, b0);
    return total;
}

// Average reward of a witnessing game under a matched strategy: the
// conditional rewards collapse to sum_i beta_i Tr[Z (tau_i (x) rho (x)
// omega_i)] with Z = sum_u P_u (x) Q_u.
inline double contract_average_reward(const std::vector<Mat>& alice,
                                      const std::vector<Mat>& bob,
                                      const std::vector<double>& beta,
                                      const std::vector<Mat>& tau,
                                      const std::vector<Mat>& omega, const Mat& rho,
                                      int da, int da0, int db0, int db) {
    Cx total(0, 0);
    for (std::size_t i = 0; i < beta.size(); ++i)
        for (std::size_t u = 0; u < alice.size(); ++u)
            total += beta[i] * contract_reward(alice[u], bob[u], tau[i], rho, omega[i],
                                               da, da0, db0, db);
    return total.real();
}

} // namespace oracle_support
