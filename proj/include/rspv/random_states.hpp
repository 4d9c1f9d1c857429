// random_states.hpp
// Seeded generators for property suites: mixed states built from 1–4 random
// pure states, uniform phases, and random single-qubit unitaries.

#pragma once

#include "rspv/qmat.hpp"

#include <cstdint>
#include <random>

namespace rspv {

class StateSampler {
  public:
    explicit StateSampler(std::uint64_t seed);

    /// Normalized mixture of 1–4 pure states with complex Gaussian amplitudes.
    DensityOperator random_state(int dim = 4);
    PureKet random_ket(int dim);
    /// Uniform on [0, 2π).
    double random_phase();
    /// e^{iα} Rz(β) Ry(γ) Rz(δ) with uniform angles.
    UnitaryOp random_unitary();
    /// Random diagonal (incoherent) state of the given dimension.
    DensityOperator random_incoherent_state(int dim);

  private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> gauss_{0.0, 1.0};
    std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

} // namespace rspv
