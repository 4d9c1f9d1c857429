// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "oracles.hpp"

#include "rspv/harness.hpp"
#include "rspv/noise.hpp"
#include "rspv/optics.hpp"
#include "rspv/protocol.hpp"
#include "rspv/random_states.hpp"
#include "rspv/sampling.hpp"
#include "rspv/verify.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

using namespace rspv;

namespace {

constexpr double kPi = std::numbers::pi;

// Pinned tolerances.
constexpr double kTolEquivalence = 1e-10;
constexpr double kTolFidelityWitness = 1e-10;
constexpr double kTolBenchmark = 1e-12;
constexpr double kTolMeasuredIdeal = 0.01;
constexpr double kTolMeasuredTable = 0.02;
constexpr double kTolEquator360 = 1e-3;
constexpr double kTolEquator8 = 1e-12;
constexpr double kTolZeroWitness = 1e-12;
constexpr double kTolAverage = 1e-9;
constexpr double kTolOperational = 1e-10;
constexpr double kTolOptics = 1e-10;
constexpr double kTolNoiseSurface = 1e-12;
constexpr double kTolDiscordAnchor = 1e-9;
constexpr double kTolDiscordOracle = 1e-3;
constexpr double kSigmaBand = 3.0;
constexpr int kMinCoveredTrials = 95;
constexpr double kScalingFactor = 1.5;

constexpr std::uint64_t kSeed = 20240501;

struct Verdict {
    bool pass;
    std::string detail;
};

std::string fmt(const char *f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

UnitaryOp phase_diag(double theta) { return UnitaryOp(ComplexMatrix(2, {1.0, 0.0, 0.0, std::polar(1.0, theta)})); }

Verdict c1_equivalence() {
    StateSampler gen(kSeed);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const auto rho = gen.random_state(4);
        const double phi = gen.random_phase();
        worst = std::max(worst, std::abs(payoff(rho, phi) - coherence_enhancement(rho, phi).value));
    }
    return {worst <= kTolEquivalence, fmt("1000 states, max |P - dW| = %.3e (tol %.0e)", worst, kTolEquivalence)};
}

Verdict c2_fidelity_witness() {
    StateSampler gen(kSeed);
    double worst_c = 0.0, worst_m = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const auto rho = gen.random_state(4);
        const double phi = gen.random_phase();
        const UnitaryOp chan = target_unitary(phi);
        const auto cond = rsp_output_operational(rho, RspChannelSpec::ideal(phi));
        const auto marg = partial_trace_a(rho);
        worst_c = std::max(worst_c, std::abs(fidelity_with_target(cond, phi) - (witness(cond, chan).value + 0.5)));
        worst_m = std::max(worst_m, std::abs(fidelity_with_target(marg, phi) - (witness(marg, chan).value + 0.5)));
    }
    return {worst_c <= kTolFidelityWitness && worst_m <= kTolFidelityWitness,
            fmt("max |F - (W + 1/2)|: conditional %.3e, marginal %.3e (tol %.0e)", worst_c, worst_m,
                kTolFidelityWitness)};
}

Verdict c3_ideal_benchmark() {
    double worst = 0.0;
    for (int k = 0; k < 360; ++k)
        worst = std::max(worst, std::abs(payoff(epr_psi_minus(), 2 * kPi * k / 360) - 0.5));
    const double measured = 0.4946;
    const double gap = std::abs(measured - 0.5);
    return {worst <= kTolBenchmark && gap <= kTolMeasuredIdeal,
            fmt("max |P(psi-) - 0.5| = %.3e over 360 phases (tol %.0e); measured %.4f off by %.4f (tol %.2f)", worst,
                kTolBenchmark, measured, gap, kTolMeasuredIdeal)};
}

Verdict c4_noisy_benchmark() {
    const harness::Table t = harness::cmd_table1(std::nullopt);
    double worst = 0.0, worst_measured = 0.0;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        worst = std::max({worst, std::abs(*t.at(r, "P") - 0.35), std::abs(*t.at(r, "dW") - 0.35)});
        for (const char *c : {"F_BA", "F_B", "W_BA", "W_B"})
            worst_measured = std::max(worst_measured, std::abs(*t.at(r, std::string("measured_") + c) - *t.at(r, c)));
    }
    return {t.rows.size() == 8 && worst <= kTolBenchmark && worst_measured <= kTolMeasuredTable,
            fmt("8 phases, max |P - 0.35|, |dW - 0.35| = %.3e (tol %.0e); max measured-vs-analytic gap %.4f (tol %.2f)",
                worst, kTolBenchmark, worst_measured, kTolMeasuredTable)};
}

Verdict c5_equator_average() {
    harness::SweepPhiOptions o;
    o.n = 360;
    const double avg360 = harness::cmd_sweep_phi(o, std::nullopt).meta["equator_average_q0"].get<double>();
    o.n = 8;
    const double avg8 = harness::cmd_sweep_phi(o, std::nullopt).meta["equator_average_q0"].get<double>();
    const double stated8 = 0.21125;
    // Independent 8-point mean of |0.35 cos φ| at 45° steps: 0.35 (2·1 + 4·√½ + 2·0) / 8.
    const double derived8 = 0.35 * (2.0 + 4.0 * std::sqrt(0.5)) / 8.0;
    const bool ok360 = std::abs(avg360 - 0.35 * 2.0 / kPi) <= kTolEquator360;
    const bool ok8_stated = std::abs(avg8 - stated8) <= kTolEquator8;
    const bool ok8_derived = std::abs(avg8 - derived8) <= kTolEquator8;
    return {ok360 && ok8_stated,
            fmt("n=360 average %.6f vs 0.35*2/pi=%.6f (tol %.0e) %s; n=8 average %.13f vs stated 0.21125 "
                "|diff| %.3e (tol %.0e) %s; vs exact 8-point mean %.13f %s",
                avg360, 0.35 * 2.0 / kPi, kTolEquator360, ok360 ? "ok" : "MISS", avg8, std::abs(avg8 - stated8),
                kTolEquator8, ok8_stated ? "ok" : "MISS", derived8, ok8_derived ? "ok" : "MISS")};
}

Verdict c6_not_established() {
    const auto rho = rho_noise();
    const auto marg = partial_trace_a(rho);
    bool ok = true;
    double worst = 0.0;
    for (double deg : {90.0, 270.0}) {
        const double phi = deg * kPi / 180.0;
        for (int q : {0, 1}) {
            const CqbVerdict v = cqb(rsp_output_closed_form(rho, phi), marg, gates::hadamard(), q);
            worst = std::max(worst, std::abs(v.witness_tilde));
            ok = ok && !v.established && !v.delta_gt && !v.delta_lt && std::abs(v.witness_tilde) <= kTolZeroWitness;
        }
    }
    return {ok, fmt("90 and 270 deg, q=0,1: both branches not established, max |W| = %.3e (tol %.0e)", worst,
                    kTolZeroWitness)};
}

Verdict c7_averages() {
    StateSampler gen(kSeed + 7);
    std::vector<DensityOperator> states = {epr_psi_minus(), rho_noise()};
    for (int i = 0; i < 100; ++i)
        states.push_back(gen.random_state(4));
    double worst = 0.0;
    bool identical = true;
    for (const auto &rho : states) {
        worst = std::max({worst, std::abs(payoff_avg(rho) - payoff_avg_numeric(rho, 360)),
                          std::abs(enhancement_avg(rho) - enhancement_avg_numeric(rho, 360))});
        identical = identical && payoff_avg(rho) == enhancement_avg(rho);
    }
    return {worst <= kTolAverage && identical,
            fmt("%zu states, max |entry formula - 360-pt integral| = %.3e (tol %.0e); P_avg == dW_avg bitwise: %s",
                states.size(), worst, kTolAverage, identical ? "yes" : "no")};
}

Verdict c8_operational() {
    StateSampler gen(kSeed + 8);
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        const auto rho = gen.random_state(4);
        const double phi = gen.random_phase();
        worst = std::max(worst, frobenius_distance(rsp_output_operational(rho, RspChannelSpec::ideal(phi)).mat(),
                                                   rsp_output_closed_form(rho, phi).mat()));
    }
    return {worst <= kTolOperational, fmt("500 states, max Frobenius distance %.3e (tol %.0e)", worst, kTolOperational)};
}

Verdict c9_optics() {
    using namespace optics;
    // Literal arrangement: outer quarter-wave plates at +45° and -45°, middle half-wave plate scanned.
    // Best match over a fine scan of the middle plate angle, for each target phase.
    int literal_hits = 0;
    for (int k = 0; k < 64; ++k) {
        const double theta = 2 * kPi * k / 64;
        bool hit = false;
        for (int m = 0; m < 3600 && !hit; ++m) {
            const double a = kPi * m / 3600;
            hit = equal_up_to_global_phase(compose({jones_qwp(-kPi / 4), jones_hwp(a), jones_qwp(kPi / 4)}),
                                           phase_diag(theta), kTolOptics);
        }
        literal_hits += hit ? 1 : 0;
    }
    int shifter_hits = 0, udag_hits = 0;
    for (int k = 0; k < 64; ++k) {
        const double x = 2 * kPi * k / 64;
        shifter_hits += equal_up_to_global_phase(qhq_phase_shifter(x), phase_diag(x), kTolOptics) ? 1 : 0;
        udag_hits += equal_up_to_global_phase(compose({qhq_phase_shifter(-x), jones_hwp(kPi / 8)}),
                                              target_unitary(x).adjoint(), kTolOptics)
                         ? 1
                         : 0;
    }
    const bool hadamard0 =
        equal_up_to_global_phase(compose({qhq_phase_shifter(0.0), jones_hwp(kPi / 8)}), gates::hadamard(), kTolOptics);
    return {literal_hits == 64 && udag_hits == 64 && hadamard0,
            fmt("QWP(+45)HWP QWP(-45) phase shifter: %d/64 phases reachable; QWP(+45)HWP QWP(+45) shifter %d/64; "
                "with HWP(22.5) = U_dagger %d/64; theta=0 gives Hadamard: %s (tol %.0e)",
                literal_hits, shifter_hits, udag_hits, hadamard0 ? "yes" : "no", kTolOptics)};
}

Verdict c10_noise_surface() {
    const auto grid = unit_grid(0.05);
    double worst = 0.0;
    int cells = 0;
    for (const auto &c : payoff_surface(grid, grid, 0.0))
        if (c.admissible) {
            ++cells;
            worst = std::max(worst, std::abs(*c.delta_w - (1.0 - c.p1 - c.p2) / 2.0));
        }
    return {cells == 231 && worst <= kTolNoiseSurface,
            fmt("%d admissible cells, max |dW - (1-p1-p2)/2| = %.3e (tol %.0e)", cells, worst, kTolNoiseSurface)};
}

Verdict c11_discord() {
    const double d_psi = geometric_discord(epr_psi_minus());
    const double d_mix = geometric_discord(DensityOperator(ComplexMatrix::identity(4) * 0.25));
    const bool anchors = std::abs(d_psi - 0.5) <= kTolDiscordAnchor && std::abs(d_mix) <= kTolDiscordAnchor;
    StateSampler gen(kSeed + 11);
    std::vector<DensityOperator> states;
    for (int i = 0; i < 20; ++i)
        states.push_back(gen.random_state(4));
    for (double p : {0.0, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5})
        states.push_back(rho_p(NoiseParams(p, p)));
    double worst = 0.0;
    for (const auto &rho : states)
        worst = std::max(worst, std::abs(geometric_discord(rho) - oracle::discord_grid(oracle::to4(rho.mat()), 1.0)));
    return {anchors && worst <= kTolDiscordOracle,
            fmt("D(psi-) = %.12f, D(I/4) = %.3e (tol %.0e); %zu states vs 1-degree grid oracle max gap %.3e (tol %.0e)",
                d_psi, d_mix, kTolDiscordAnchor, states.size(), worst, kTolDiscordOracle)};
}

Verdict c12_statistics() {
    const auto rho = rho_noise();
    const auto cond = rsp_output_closed_form(rho, 0.0);
    const auto marg = partial_trace_a(rho);
    const UnitaryOp chan = target_unitary(0.0);
    const double w_cond = witness(cond, chan).value, w_marg = witness(marg, chan).value;
    int covered = 0;
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        ShotSampler sampler(ShotConfig{100000, kSeed}, trial);
        const Estimate a = estimate_witness(cond, chan, 0, sampler);
        const Estimate b = estimate_witness(marg, chan, 0, sampler);
        if (std::abs(a.value - w_cond) <= kSigmaBand * a.standard_error &&
            std::abs(b.value - w_marg) <= kSigmaBand * b.standard_error)
            ++covered;
    }
    // shots^{-1/2}: successive decades should shrink the standard error by √10.
    double se[3];
    const std::uint64_t shots[3] = {1000, 10000, 100000};
    for (int i = 0; i < 3; ++i)
        se[i] = estimate_witness(cond, chan, 0, ShotConfig{shots[i], kSeed}).standard_error;
    double worst_ratio = 1.0;
    for (int i = 0; i < 2; ++i) {
        const double r = (se[i] / se[i + 1]) / std::sqrt(10.0);
        worst_ratio = std::max({worst_ratio, r, 1.0 / r});
    }
    return {covered >= kMinCoveredTrials && worst_ratio <= kScalingFactor,
            fmt("%d/100 trials within %.0f sigma (need %d); SE %.3e, %.3e, %.3e at 1e3/1e4/1e5 shots, worst "
                "deviation from sqrt scaling x%.3f (tol x%.1f)",
                covered, kSigmaBand, kMinCoveredTrials, se[0], se[1], se[2], worst_ratio, kScalingFactor)};
}

} // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Verdict()>>> criteria = {
        {"equivalence theorem", c1_equivalence},
        {"fidelity-witness relation", c2_fidelity_witness},
        {"ideal benchmark", c3_ideal_benchmark},
        {"noisy benchmark", c4_noisy_benchmark},
        {"Hadamard equator average", c5_equator_average},
        {"not-established zeros", c6_not_established},
        {"average formulas", c7_averages},
        {"operational vs closed form", c8_operational},
        {"optics realization", c9_optics},
        {"noise surface closed form", c10_noise_surface},
        {"geometric discord", c11_discord},
        {"statistical estimation", c12_statistics},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v{false, ""};
        try {
            v = criteria[i].second();
        } catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failures += v.pass ? 0 : 1;
        std::printf("[%s] criterion %2zu %-28s %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    v.detail.c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
