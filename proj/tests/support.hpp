#pragma once

#include "rspv/noise.hpp"
#include "rspv/qmat.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace support {

using rspv::cplx;
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kDeg = kPi / 180.0;

inline double max_abs_diff(const rspv::ComplexMatrix &a, const rspv::ComplexMatrix &b) {
    double m = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

inline rspv::DensityOperator qubit(cplx a00, cplx a01, cplx a10, cplx a11) {
    return rspv::DensityOperator(rspv::ComplexMatrix(2, {a00, a01, a10, a11}));
}

/// [[0.45, 0.35 e^{-iφ}], [0.35 e^{iφ}, 0.55]], Bob's ideal RSP output for the working noisy state.
inline rspv::ComplexMatrix noisy_output(double phi) {
    return rspv::ComplexMatrix(2, {0.45, 0.35 * std::polar(1.0, -phi), 0.35 * std::polar(1.0, phi), 0.55});
}

inline rspv::DensityOperator ket_projector(int dim, int index) { return rspv::PureKet::basis(dim, index).projector(); }

} // namespace support
