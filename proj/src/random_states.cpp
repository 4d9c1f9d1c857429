#include "rspv/random_states.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace rspv {

StateSampler::StateSampler(std::uint64_t seed) : engine_(seed) {}

PureKet StateSampler::random_ket(int dim) {
    std::vector<cplx> amps(static_cast<std::size_t>(dim));
    for (cplx &a : amps)
        a = {gauss_(engine_), gauss_(engine_)};
    return PureKet::normalized(std::move(amps));
}

DensityOperator StateSampler::random_state(int dim) {
    std::uniform_int_distribution<int> rank(1, 4);
    const int k = rank(engine_);
    std::vector<double> w(static_cast<std::size_t>(k));
    double total = 0.0;
    for (double &x : w) {
        x = unit_(engine_) + 1e-3;
        total += x;
    }
    ComplexMatrix acc(dim);
    for (double x : w)
        acc += random_ket(dim).projector().mat() * cplx{x / total};
    // Symmetrize so rounding never trips the Hermiticity check.
    return DensityOperator((acc + acc.adjoint()) * cplx{0.5});
}

double StateSampler::random_phase() { return 2.0 * std::numbers::pi * unit_(engine_); }

UnitaryOp StateSampler::random_unitary() {
    const double tau = 2.0 * std::numbers::pi;
    const double alpha = tau * unit_(engine_), beta = tau * unit_(engine_);
    const double gamma = tau * unit_(engine_), delta = tau * unit_(engine_);
    auto rz = [](double a) { return ComplexMatrix(2, {std::polar(1.0, -a / 2), 0.0, 0.0, std::polar(1.0, a / 2)}); };
    const double c = std::cos(gamma / 2), s = std::sin(gamma / 2);
    const ComplexMatrix ry(2, {c, -s, s, c});
    return UnitaryOp(std::polar(1.0, alpha) * (rz(beta) * ry * rz(delta)));
}

DensityOperator StateSampler::random_incoherent_state(int dim) {
    std::vector<cplx> d(static_cast<std::size_t>(dim));
    double total = 0.0;
    for (cplx &x : d) {
        x = unit_(engine_);
        total += x.real();
    }
    for (cplx &x : d)
        x /= total;
    return DensityOperator(ComplexMatrix::diagonal(d));
}

} // namespace rspv
