#include "rspv/optics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace rspv::optics {

namespace {

constexpr double kPi = std::numbers::pi;

double fold_angle(double a) {
    if (!std::isfinite(a))
        throw std::invalid_argument("waveplate angle must be finite");
    double r = std::fmod(a, kPi);
    if (r < 0.0)
        r += kPi;
    if (r >= kPi)
        r = 0.0;
    return r;
}

ComplexMatrix rotation(double a) {
    const double c = std::cos(a), s = std::sin(a);
    return ComplexMatrix(2, {c, s, -s, c});
}

} // namespace

WaveplateSetting::WaveplateSetting(PlateKind kind, double angle) : kind_(kind), angle_(fold_angle(angle)) {}

UnitaryOp WaveplateSetting::jones() const {
    return kind_ == PlateKind::HalfWave ? jones_hwp(angle_) : jones_qwp(angle_);
}

UnitaryOp jones_hwp(double angle) {
    if (!std::isfinite(angle))
        throw std::invalid_argument("waveplate angle must be finite");
    const double c = std::cos(2.0 * angle), s = std::sin(2.0 * angle);
    return UnitaryOp(ComplexMatrix(2, {c, s, s, -c}));
}

UnitaryOp jones_qwp(double angle) {
    if (!std::isfinite(angle))
        throw std::invalid_argument("waveplate angle must be finite");
    const ComplexMatrix d(2, {1.0, 0.0, 0.0, cplx{0.0, 1.0}});
    return UnitaryOp(rotation(-angle) * d * rotation(angle));
}

UnitaryOp compose(std::span<const UnitaryOp> ops) {
    if (ops.empty())
        throw std::invalid_argument("compose needs at least one operator");
    ComplexMatrix acc = ops.front().mat();
    for (std::size_t k = 1; k < ops.size(); ++k) {
        if (ops[k].dim() != 2)
            throw std::invalid_argument("compose works on single-qubit operators");
        acc = ops[k].mat() * acc;
    }
    return UnitaryOp(acc);
}

UnitaryOp compose(std::initializer_list<UnitaryOp> ops) {
    return compose(std::span<const UnitaryOp>(ops.begin(), ops.size()));
}

bool equal_up_to_global_phase(const UnitaryOp &a, const UnitaryOp &b, double tol) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("equal_up_to_global_phase: dimension mismatch");
    std::size_t best = 0;
    const auto eb = b.mat().entries();
    for (std::size_t k = 1; k < eb.size(); ++k)
        if (std::abs(eb[k]) > std::abs(eb[best]))
            best = k;
    const cplx ratio = a.mat().entries()[best] / eb[best];
    if (std::abs(ratio) == 0.0)
        return false;
    const cplx phase = ratio / std::abs(ratio);
    return frobenius_distance(a.mat(), phase * b.mat()) <= tol;
}

QhqSetting qhq_setting(double theta) {
    if (!std::isfinite(theta))
        throw std::invalid_argument("phase must be finite");
    // With the convention above, QWP(π/4)·HWP(a)·QWP(π/4) ∝ diag(1, e^{i(π + 4a)}).
    const double middle = (theta - kPi) / 4.0;
    return {theta,
            {WaveplateSetting(PlateKind::QuarterWave, kPi / 4.0), WaveplateSetting(PlateKind::HalfWave, middle),
             WaveplateSetting(PlateKind::QuarterWave, kPi / 4.0)}};
}

UnitaryOp qhq_phase_shifter(double theta) {
    const QhqSetting s = qhq_setting(theta);
    return compose({s.plates[0].jones(), s.plates[1].jones(), s.plates[2].jones()});
}

UnitaryOp u_dagger_realization(double phi) { return compose({qhq_phase_shifter(-phi), jones_hwp(kPi / 8.0)}); }

} // namespace rspv::optics
