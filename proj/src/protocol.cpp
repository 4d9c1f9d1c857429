#include "rspv/protocol.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rspv {

namespace {

void require_two_qubit(const DensityOperator &rho_ab) {
    if (rho_ab.dim() != 4)
        throw std::invalid_argument("shared state must be a two-qubit density operator");
}

} // namespace

UnitaryOp target_unitary(double phi) {
    const double h = std::numbers::sqrt2 / 2.0;
    const cplx e = std::polar(h, phi);
    return UnitaryOp(ComplexMatrix(2, {h, h, e, -e}));
}

DensityOperator epr_psi_minus() {
    const double h = std::numbers::sqrt2 / 2.0;
    return PureKet({0.0, h, -h, 0.0}).projector();
}

RspChannelSpec RspChannelSpec::ideal(double phi) {
    return {target_unitary(phi).adjoint(), gates::pauli_z(), 0};
}

std::array<RspOutcome, 2> alice_measure(const DensityOperator &rho_ab, const RspChannelSpec &spec) {
    require_two_qubit(rho_ab);
    if (spec.u_dagger.dim() != 2 || spec.correction.dim() != 2)
        throw std::invalid_argument("channel spec operators must be single-qubit");
    const ComplexMatrix v = tensor(spec.u_dagger.mat(), ComplexMatrix::identity(2));
    const ComplexMatrix rotated = v * rho_ab.mat() * v.adjoint();

    std::array<RspOutcome, 2> out;
    for (int bit = 0; bit < 2; ++bit) {
        // (|bit><bit| ⊗ I) σ (|bit><bit| ⊗ I), then trace out Alice.
        ComplexMatrix bob(2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                bob(i, j) = rotated(2 * bit + i, 2 * bit + j);
        const double p = bob.trace().real();
        out[static_cast<std::size_t>(bit)].alice_bit = bit;
        if (p <= kZeroProbability) {
            out[static_cast<std::size_t>(bit)].probability = 0.0;
            continue;
        }
        out[static_cast<std::size_t>(bit)].probability = p;
        out[static_cast<std::size_t>(bit)].bob_state.emplace(bob * cplx{1.0 / p});
    }
    return out;
}

DensityOperator bob_correct(const RspOutcome &outcome, const RspChannelSpec &spec) {
    if (!outcome.bob_state || outcome.probability <= 0.0)
        throw std::invalid_argument("cannot correct a zero-probability outcome");
    if (outcome.alice_bit == spec.correction_bit)
        return spec.correction.conjugate(*outcome.bob_state);
    return *outcome.bob_state;
}

DensityOperator rsp_output_operational(const DensityOperator &rho_ab, const RspChannelSpec &spec) {
    const auto outcomes = alice_measure(rho_ab, spec);
    ComplexMatrix acc(2);
    for (const RspOutcome &o : outcomes)
        if (o.bob_state)
            acc += bob_correct(o, spec).mat() * cplx{o.probability};
    return DensityOperator(acc);
}

DensityOperator rsp_output_closed_form(const DensityOperator &rho_ab, double phi) {
    require_two_qubit(rho_ab);
    const cplx e = std::polar(1.0, phi);
    const cplx ec = std::conj(e);
    const auto &r = rho_ab.mat(); // 0-indexed: r(0,0) is ρ11
    ComplexMatrix m(2);
    m(0, 0) = r(0, 0) + r(2, 2);
    m(0, 1) = -ec * r(2, 1) - e * r(0, 3);
    m(1, 0) = -e * r(1, 2) - ec * r(3, 0);
    m(1, 1) = r(1, 1) + r(3, 3);
    return DensityOperator(m);
}

} // namespace rspv
