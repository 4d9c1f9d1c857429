// verify.hpp
// Coherence witness, quantum-benefit payoff, coherence enhancement, the
// one-sided coherence-quantum-benefit criteria and geometric discord.

#pragma once

#include "rspv/qmat.hpp"

#include <array>
#include <optional>

namespace rspv {

/// W = <q|E(ρ)|q> − Σ_j ρ_jj Ω_qj with E(ρ) = C† ρ C and Ω_qj = <q|E(|j><j|)|q>.
struct WitnessReport {
    double value = 0.0;
    double coherent_term = 0.0;   // <q|E(ρ)|q>
    double incoherent_term = 0.0; // Σ_j ρ_d^(jj) Ω_qj
    int q = 0;
};

/// Ω_qj for both j, i.e. the populations of |q> after the channel acts on |j><j|.
std::array<double, 2> reference_populations(const UnitaryOp &channel, int q);

/// True when the channel sends every computational basis state to a basis state.
bool is_incoherent_channel(const UnitaryOp &channel, double tol = 1e-12);

/// Throws std::invalid_argument for an incoherent channel or q outside {0,1}.
WitnessReport witness(const DensityOperator &rho, const UnitaryOp &channel, int q = 0);

/// F(ρ_{B|A}) − F(ρ_B) for ideal Alice and Bob.
double payoff(const DensityOperator &rho_ab, double phi);

/// The same payoff written out in the entries of ρ_AB.
double payoff_entry_formula(const DensityOperator &rho_ab, double phi);

/// Mean payoff over the equator: −(ρ23 + ρ32)/2 (1-indexed).
double payoff_avg(const DensityOperator &rho_ab);
/// Periodic trapezoid average of payoff over n equally spaced phases.
double payoff_avg_numeric(const DensityOperator &rho_ab, int n = 360);

struct Enhancement {
    double value = 0.0;
    /// W(ρ_{B|A}) > 0, the side condition under which ΔW is the enhancement.
    bool valid = false;
    double witness_conditional = 0.0;
    double witness_marginal = 0.0;
};

/// ΔW = W(ρ_{B|A}) − W(ρ_B) under E(ρ) = U†ρU with U = target_unitary(φ), q = 0.
Enhancement coherence_enhancement(const DensityOperator &rho_ab, double phi);

/// Mean coherence enhancement over the equator; identical entry formula to payoff_avg.
double enhancement_avg(const DensityOperator &rho_ab);
double enhancement_avg_numeric(const DensityOperator &rho_ab, int n = 360);

/// |W| at or below this means neither criterion is established.
inline constexpr double kCqbTol = 1e-9;

struct CqbVerdict {
    std::optional<double> delta_gt; // W(ρ̃) − W(ρ_B), when W(ρ̃) > tol
    std::optional<double> delta_lt; // W(ρ_B) − W(ρ̃), when W(ρ̃) < −tol
    bool established = false;
    double witness_tilde = 0.0;
    double witness_marginal = 0.0;

    /// Whichever branch applies, or 0 when not established.
    double magnitude() const;
};

CqbVerdict cqb(const DensityOperator &rho_tilde, const DensityOperator &rho_b, const UnitaryOp &channel, int q = 0,
               double tol = kCqbTol);

/// Mean established benefit over n equally spaced target phases using the
/// ideal protocol output. Requires n ≥ 8.
double cqb_equator_average(const DensityOperator &rho_ab, const UnitaryOp &channel, int q, int n_samples);

// Local Bloch vector of Alice and correlation tensor T_ij = tr(ρ σ_i ⊗ σ_j).
struct CorrelationData {
    std::array<double, 3> alice{};
    std::array<double, 3> bob{};
    std::array<std::array<double, 3>, 3> t{};
};

CorrelationData correlation_data(const DensityOperator &rho_ab);

/// D = ¼(‖x‖² + ‖T‖² − k_max), k_max the top eigenvalue of x xᵀ + T Tᵀ.
double geometric_discord(const DensityOperator &rho_ab);

} // namespace rspv
