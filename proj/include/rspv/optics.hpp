// optics.hpp
// Jones-calculus waveplates and the QWP-HWP-QWP phase shifter used to realize
// Alice's rotation, Bob's π correction and Bob's verifying operation.
//
// Convention (global phases dropped):
//   HWP(a) = [[cos 2a, sin 2a], [sin 2a, -cos 2a]]
//   QWP(a) = R(-a) diag(1, i) R(a),  R(a) = [[cos a, sin a], [-sin a, cos a]]
// so HWP(0) = Z, HWP(π/8) = Hadamard, HWP(π/4) = X, QWP(0) = diag(1, i).

#pragma once

#include "rspv/qmat.hpp"

#include <array>
#include <span>

namespace rspv::optics {

enum class PlateKind { HalfWave, QuarterWave };

// A single waveplate with its fast-axis angle folded into [0, π).
class WaveplateSetting {
  public:
    WaveplateSetting(PlateKind kind, double angle);

    PlateKind kind() const { return kind_; }
    double angle() const { return angle_; }
    UnitaryOp jones() const;

  private:
    PlateKind kind_;
    double angle_;
};

UnitaryOp jones_hwp(double angle);
UnitaryOp jones_qwp(double angle);

/// Matrix product in application order: ops[0] acts first.
UnitaryOp compose(std::span<const UnitaryOp> ops);
UnitaryOp compose(std::initializer_list<UnitaryOp> ops);

/// True iff ‖a − c·b‖_F ≤ tol for the unit-modulus c fixed by the
/// largest-magnitude entry of b.
bool equal_up_to_global_phase(const UnitaryOp &a, const UnitaryOp &b, double tol);

// Mount angles of the three plates of a phase shifter, in application order.
struct QhqSetting {
    double theta = 0.0; // induced relative phase
    std::array<WaveplateSetting, 3> plates;
};

/// Plate settings realizing diag(1, e^{iθ}). The outer quarter-wave plates
/// both sit at +45°; the half-wave plate sits at (θ − π)/4 folded into [0, π).
/// The mount angle depends on the Jones convention above.
QhqSetting qhq_setting(double theta);

/// diag(1, e^{iθ}) up to global phase, built from the plates of qhq_setting.
UnitaryOp qhq_phase_shifter(double theta);

/// Verifier/Alice rotation U†(φ) realized as a phase shifter at −φ followed by HWP(π/8).
UnitaryOp u_dagger_realization(double phi);

} // namespace rspv::optics
