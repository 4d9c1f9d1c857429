// noise.hpp
// Shared-state families: the singlet mixed with |00> and |11> noise, and
// general convex mixtures weighted by creation duration.

#pragma once

#include "rspv/qmat.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rspv {

// Noise intensities; p1 + p2 ≤ 1.
class NoiseParams {
  public:
    NoiseParams(double p1, double p2);

    double p1() const { return p1_; }
    double p2() const { return p2_; }
    static bool admissible(double p1, double p2);

  private:
    double p1_;
    double p2_;
};

// Components with nonnegative, not necessarily normalized, weights.
struct MixtureRecipe {
    std::vector<std::pair<DensityOperator, double>> components;
};

/// Σ w_i ρ_i / Σ w_i. Throws on an empty recipe, a negative weight, or all-zero weights.
DensityOperator mixture(const MixtureRecipe &recipe);

/// (1 − p1 − p2)|ψ⁻><ψ⁻| + p1|00><00| + p2|11><11|, built through mixture().
DensityOperator rho_p(const NoiseParams &params);

/// ρ_noise = rho_p(0.1, 0.2).
DensityOperator rho_noise();

struct SurfaceCell {
    double p1 = 0.0;
    double p2 = 0.0;
    bool admissible = false;
    std::optional<double> delta_w; // empty for inadmissible pairs
    bool valid = false;
};

/// ΔW(rho_p(p1, p2), φ) over the Cartesian grid, row-major in p1.
std::vector<SurfaceCell> payoff_surface(std::span<const double> p1_grid, std::span<const double> p2_grid,
                                        double phi = 0.0);

/// 0, step, 2·step, ... up to and including 1 (within rounding).
std::vector<double> unit_grid(double step);

} // namespace rspv
