#include "rspv/sampling.hpp"

#include "rspv/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rspv {

namespace {

// Probabilities computed from unit-trace states may overshoot [0, 1] by rounding.
constexpr double kProbabilitySlack = 1e-12;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

void ShotConfig::validate() const {
    if (shots == 0)
        throw std::invalid_argument("shots must be at least 1");
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

ShotSampler::ShotSampler(const ShotConfig &cfg, std::uint64_t stream)
    : shots_(cfg.shots), engine_(substream_seed(cfg.seed, stream)) {
    cfg.validate();
}

std::uint64_t ShotSampler::counts(double probability) {
    if (!(probability >= -kProbabilitySlack && probability <= 1.0 + kProbabilitySlack))
        throw std::invalid_argument("probability " + std::to_string(probability) + " outside [0, 1]");
    const double p = std::clamp(probability, 0.0, 1.0);
    if (p == 0.0)
        return 0;
    if (p == 1.0)
        return shots_;
    std::binomial_distribution<std::uint64_t> dist(shots_, p);
    return dist(engine_);
}

std::uint64_t sample_counts(double probability, const ShotConfig &cfg) {
    ShotSampler sampler(cfg, 0);
    return sampler.counts(probability);
}

Estimate estimate_population(double probability, ShotSampler &sampler) {
    const double n = static_cast<double>(sampler.shots());
    const double f = static_cast<double>(sampler.counts(probability)) / n;
    return {f, std::sqrt(f * (1.0 - f) / n)};
}

Estimate estimate_witness(const DensityOperator &rho, const UnitaryOp &channel, int q, ShotSampler &sampler) {
    // Validates inputs and supplies the exact populations each setting samples.
    const WitnessReport exact = witness(rho, channel, q);
    const auto omega = reference_populations(channel, q);

    const Estimate transition = estimate_population(exact.coherent_term, sampler);
    const Estimate diag0 = estimate_population(rho(0, 0).real(), sampler);
    const Estimate ref0 = estimate_population(omega[0], sampler);
    const Estimate ref1 = estimate_population(omega[1], sampler);

    const double d0 = diag0.value, d1 = 1.0 - diag0.value;
    const double value = transition.value - (d0 * ref0.value + d1 * ref1.value);
    const double slope = ref0.value - ref1.value;
    const double var = transition.standard_error * transition.standard_error +
                       slope * slope * diag0.standard_error * diag0.standard_error +
                       d0 * d0 * ref0.standard_error * ref0.standard_error +
                       d1 * d1 * ref1.standard_error * ref1.standard_error;
    return {value, std::sqrt(var)};
}

Estimate estimate_witness(const DensityOperator &rho, const UnitaryOp &channel, int q,
                          const std::optional<ShotConfig> &cfg) {
    if (!cfg)
        return {witness(rho, channel, q).value, 0.0};
    ShotSampler sampler(*cfg, 0);
    return estimate_witness(rho, channel, q, sampler);
}

} // namespace rspv
