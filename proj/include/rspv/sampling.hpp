// sampling.hpp
// Finite photon-counting statistics: each measurement setting is an
// independent binomial draw over a fixed number of photon pairs.

#pragma once

#include "rspv/qmat.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

namespace rspv {

/// Name echoed into output metadata so results can be tied to the generator.
inline constexpr std::string_view kGeneratorName = "mt19937_64+splitmix64-substreams+std::binomial_distribution";

struct ShotConfig {
    std::uint64_t shots = 10'000;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument when shots == 0.
    void validate() const;
};

/// Mixes (seed, stream) into an independent 64-bit seed.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream);

// Binomial count generator bound to one (seed, stream) pair. Draws are
// consumed in call order, so a fixed sequence of calls is reproducible.
class ShotSampler {
  public:
    ShotSampler(const ShotConfig &cfg, std::uint64_t stream);

    std::uint64_t shots() const { return shots_; }
    /// Successes out of shots() trials. Throws for probabilities outside [0, 1].
    std::uint64_t counts(double probability);

  private:
    std::uint64_t shots_;
    std::mt19937_64 engine_;
};

/// One draw from stream 0 of cfg.
std::uint64_t sample_counts(double probability, const ShotConfig &cfg);

struct Estimate {
    double value = 0.0;
    double standard_error = 0.0;
};

/// Fraction of successes and its binomial standard error sqrt(f(1−f)/N).
Estimate estimate_population(double probability, ShotSampler &sampler);

/// Simulated three-setting witness measurement:
///  (i) |q> population after the channel acts on ρ,
///  (ii) computational-basis populations of ρ (one setting, two outcomes),
///  (iii) |q> population after the channel acts on |0><0| and on |1><1|.
/// Combined as W = (i) − Σ_j (ii)_j (iii)_j with errors added in quadrature.
Estimate estimate_witness(const DensityOperator &rho, const UnitaryOp &channel, int q, ShotSampler &sampler);

/// Exact mode when cfg is empty: returns the analytic witness with zero error.
Estimate estimate_witness(const DensityOperator &rho, const UnitaryOp &channel, int q,
                          const std::optional<ShotConfig> &cfg);

} // namespace rspv
