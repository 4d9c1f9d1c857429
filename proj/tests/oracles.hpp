// oracles.hpp
// Test-only reference computations. These deliberately avoid the library's
// matrix class and closed forms: plain arrays, explicit projectors, brute-force
// minimization.

#pragma once

#include "rspv/qmat.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace oracle {

using cplx = std::complex<double>;
using Mat2 = std::array<std::array<cplx, 2>, 2>;
using Mat4 = std::array<std::array<cplx, 4>, 4>;

inline Mat4 to4(const rspv::ComplexMatrix &m) {
    Mat4 r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            r[i][j] = m(i, j);
    return r;
}

inline Mat2 to2(const rspv::ComplexMatrix &m) {
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[i][j] = m(i, j);
    return r;
}

template <std::size_t N>
std::array<std::array<cplx, N>, N> mul(const std::array<std::array<cplx, N>, N> &a,
                                       const std::array<std::array<cplx, N>, N> &b) {
    std::array<std::array<cplx, N>, N> r{};
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            for (std::size_t k = 0; k < N; ++k)
                r[i][j] += a[i][k] * b[k][j];
    return r;
}

template <std::size_t N> std::array<std::array<cplx, N>, N> dagger(const std::array<std::array<cplx, N>, N> &a) {
    std::array<std::array<cplx, N>, N> r{};
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            r[i][j] = std::conj(a[j][i]);
    return r;
}

template <std::size_t N> cplx trace(const std::array<std::array<cplx, N>, N> &a) {
    cplx t = 0;
    for (std::size_t i = 0; i < N; ++i)
        t += a[i][i];
    return t;
}

inline Mat4 kron(const Mat2 &a, const Mat2 &b) {
    Mat4 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    r[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
    return r;
}

inline Mat2 identity2() { return {{{1.0, 0.0}, {0.0, 1.0}}}; }

/// Bob's unnormalized state after Alice applies u_dag and projects onto |bit>,
/// computed with the explicit projector |bit><bit| ⊗ I and a sum over Alice's index.
inline Mat2 alice_branch(const Mat4 &rho, const Mat2 &u_dag, int bit) {
    Mat2 proj{};
    proj[bit][bit] = 1.0;
    const Mat4 v = kron(u_dag, identity2());
    const Mat4 p = kron(proj, identity2());
    const Mat4 post = mul(mul(p, mul(mul(v, rho), dagger(v))), p);
    Mat2 bob{};
    for (int a = 0; a < 2; ++a)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                bob[i][j] += post[2 * a + i][2 * a + j];
    return bob;
}

/// tr(ρ |s><s|) with an explicit outer product.
inline double fidelity(const Mat2 &rho, double phi) {
    const double h = std::numbers::sqrt2 / 2.0;
    const std::array<cplx, 2> s = {h, h * std::polar(1.0, phi)};
    Mat2 target{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            target[i][j] = s[i] * std::conj(s[j]);
    return trace(mul(rho, target)).real();
}

/// min over Alice measurement directions (grid in degrees) of
/// ‖ρ − Σ_± (P_± ⊗ I) ρ (P_± ⊗ I)‖²_F.
inline double discord_grid(const Mat4 &rho, double step_deg = 1.0) {
    const double deg = std::numbers::pi / 180.0;
    double best = std::numeric_limits<double>::infinity();
    for (double th = 0.0; th <= 180.0 + 1e-9; th += step_deg)
        for (double ph = 0.0; ph < 360.0 - 1e-9; ph += step_deg) {
            const double nx = std::sin(th * deg) * std::cos(ph * deg);
            const double ny = std::sin(th * deg) * std::sin(ph * deg);
            const double nz = std::cos(th * deg);
            Mat4 dephased{};
            for (int sign : {1, -1}) {
                const double s = sign;
                const Mat2 p = {{{0.5 * (1 + s * nz), 0.5 * s * cplx(nx, -ny)},
                                 {0.5 * s * cplx(nx, ny), 0.5 * (1 - s * nz)}}};
                const Mat4 big = kron(p, identity2());
                const Mat4 term = mul(mul(big, rho), big);
                for (int i = 0; i < 4; ++i)
                    for (int j = 0; j < 4; ++j)
                        dephased[i][j] += term[i][j];
            }
            double d = 0.0;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    d += std::norm(rho[i][j] - dephased[i][j]);
            best = std::min(best, d);
        }
    return best;
}

} // namespace oracle
