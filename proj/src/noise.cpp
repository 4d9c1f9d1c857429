#include "rspv/noise.hpp"

#include "rspv/protocol.hpp"
#include "rspv/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rspv {

namespace {

// Slack for grids like 0.05·k whose sums land a few ulps above 1.
constexpr double kAdmissibleSlack = 1e-12;

} // namespace

bool NoiseParams::admissible(double p1, double p2) {
    return std::isfinite(p1) && std::isfinite(p2) && p1 >= 0.0 && p2 >= 0.0 && p1 + p2 <= 1.0 + kAdmissibleSlack;
}

NoiseParams::NoiseParams(double p1, double p2) : p1_(p1), p2_(p2) {
    if (!admissible(p1, p2))
        throw std::invalid_argument("noise intensities need p1, p2 >= 0 and p1 + p2 <= 1 (got " + std::to_string(p1) +
                                    ", " + std::to_string(p2) + ")");
}

DensityOperator mixture(const MixtureRecipe &recipe) {
    if (recipe.components.empty())
        throw std::invalid_argument("mixture needs at least one component");
    const int dim = recipe.components.front().first.dim();
    double total = 0.0;
    for (const auto &[rho, w] : recipe.components) {
        if (!(w >= 0.0) || !std::isfinite(w))
            throw std::invalid_argument("mixture weights must be finite and nonnegative");
        if (rho.dim() != dim)
            throw std::invalid_argument("mixture components must share a dimension");
        total += w;
    }
    if (total <= 0.0)
        throw std::invalid_argument("mixture weights are all zero");
    ComplexMatrix acc(dim);
    for (const auto &[rho, w] : recipe.components)
        acc += rho.mat() * cplx{w / total};
    return DensityOperator(acc);
}

DensityOperator rho_p(const NoiseParams &params) {
    // Clamp the few-ulp overshoot admitted by the grid slack.
    const double singlet = std::max(0.0, 1.0 - params.p1() - params.p2());
    return mixture({{{epr_psi_minus(), singlet},
                     {PureKet::basis(4, 0).projector(), params.p1()},
                     {PureKet::basis(4, 3).projector(), params.p2()}}});
}

DensityOperator rho_noise() { return rho_p(NoiseParams(0.1, 0.2)); }

std::vector<SurfaceCell> payoff_surface(std::span<const double> p1_grid, std::span<const double> p2_grid,
                                        double phi) {
    std::vector<SurfaceCell> cells;
    cells.reserve(p1_grid.size() * p2_grid.size());
    for (double p1 : p1_grid)
        for (double p2 : p2_grid) {
            SurfaceCell c{p1, p2, NoiseParams::admissible(p1, p2), std::nullopt, false};
            if (c.admissible) {
                const Enhancement e = coherence_enhancement(rho_p(NoiseParams(p1, p2)), phi);
                c.delta_w = e.value;
                c.valid = e.valid;
            }
            cells.push_back(c);
        }
    return cells;
}

std::vector<double> unit_grid(double step) {
    if (!(step > 0.0) || step > 1.0)
        throw std::invalid_argument("grid step must lie in (0, 1]");
    const int n = static_cast<int>(std::floor(1.0 / step + 1e-9));
    std::vector<double> g;
    g.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        g.push_back(k * step);
    return g;
}

} // namespace rspv
