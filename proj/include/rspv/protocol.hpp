// protocol.hpp
// Remote state preparation: Alice rotates and measures her half of the shared
// pair, sends one bit, and Bob applies a conditional π rotation.

#pragma once

#include "rspv/qmat.hpp"

#include <array>
#include <optional>

namespace rspv {

/// U(φ) = (1/√2) [[1, 1], [e^{iφ}, −e^{iφ}]]; U|0> is the equatorial target.
UnitaryOp target_unitary(double phi);

/// |ψ⁻><ψ⁻| with |ψ⁻> = (|01> − |10>)/√2.
DensityOperator epr_psi_minus();

struct RspChannelSpec {
    UnitaryOp u_dagger;   // Alice's rotation before her computational-basis measurement
    UnitaryOp correction; // Bob's π rotation
    int correction_bit = 0;

    /// U†(φ) for Alice, Z for Bob, correction on bit 0.
    static RspChannelSpec ideal(double phi);
};

struct RspOutcome {
    int alice_bit = 0;
    double probability = 0.0;
    /// Bob's normalized conditional state; empty when the branch has zero probability.
    std::optional<DensityOperator> bob_state;
};

/// Below this a measurement branch is treated as impossible.
inline constexpr double kZeroProbability = 1e-14;

std::array<RspOutcome, 2> alice_measure(const DensityOperator &rho_ab, const RspChannelSpec &spec);

/// Applies the correction when the outcome's bit equals correction_bit.
/// Throws std::invalid_argument for a zero-probability outcome.
DensityOperator bob_correct(const RspOutcome &outcome, const RspChannelSpec &spec);

/// ρ̃_{B|A}: probability-weighted mixture of Bob's corrected states.
DensityOperator rsp_output_operational(const DensityOperator &rho_ab, const RspChannelSpec &spec);

/// ρ_{B|A} for ideal Alice and Bob, read directly off the entries of ρ_AB
/// (1-indexed, ρ_mn = <m|ρ|n>):
///   [[ρ11+ρ33, −e^{−iφ}ρ32 − e^{iφ}ρ14], [−e^{iφ}ρ23 − e^{−iφ}ρ41, ρ22+ρ44]]
DensityOperator rsp_output_closed_form(const DensityOperator &rho_ab, double phi);

} // namespace rspv
