// qmat.hpp
// Small dense complex matrices and the quantum-state value types built on them.
// Everything here is sized for one or two qubits (dimension 2 or 4).

#pragma once

#include <array>
#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace rspv {

using cplx = std::complex<double>;

/// Hermiticity tolerance used by every validated type.
inline constexpr double kHermitianTol = 1e-10;
/// Trace / norm / unitarity tolerance.
inline constexpr double kNormTol = 1e-10;
/// Smallest eigenvalue allowed for a density operator.
inline constexpr double kPsdTol = 1e-9;

// Square complex matrix of dimension 1, 2 or 4, stored row-major in a fixed
// 16-entry buffer. Basis ordering for two qubits is |m_A m_B> with Bob's
// index varying fastest, so entry (1,2) is <01|.|10>.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int dim);
    ComplexMatrix(int dim, std::initializer_list<cplx> row_major);
    ComplexMatrix(int dim, std::span<const cplx> row_major);

    static ComplexMatrix identity(int dim);
    static ComplexMatrix diagonal(std::span<const cplx> diag);

    int dim() const { return dim_; }
    cplx operator()(int r, int c) const { return a_[static_cast<std::size_t>(r * dim_ + c)]; }
    cplx &operator()(int r, int c) { return a_[static_cast<std::size_t>(r * dim_ + c)]; }
    std::span<const cplx> entries() const { return {a_.data(), static_cast<std::size_t>(dim_ * dim_)}; }

    ComplexMatrix adjoint() const;
    cplx trace() const;
    bool is_finite() const;

    ComplexMatrix &operator+=(const ComplexMatrix &o);
    ComplexMatrix &operator-=(const ComplexMatrix &o);
    ComplexMatrix &operator*=(cplx s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
    friend bool operator==(const ComplexMatrix &a, const ComplexMatrix &b);

  private:
    int dim_ = 0;
    std::array<cplx, 16> a_{};
};

/// Kronecker product a ⊗ b; a's index is the slow one. Results above 4x4 are rejected.
ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b);

/// sqrt(sum |a_ij - b_ij|^2). Throws std::invalid_argument on dimension mismatch.
double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b);

/// Real eigenvalues of a Hermitian matrix in ascending order.
/// Closed form at dim 2, Eigen's self-adjoint solver at dim 4.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m);

bool is_hermitian(const ComplexMatrix &m, double tol = kHermitianTol);

// A Hermitian, unit-trace, positive-semidefinite matrix.
class DensityOperator {
  public:
    /// Validates all three invariants; throws std::invalid_argument otherwise.
    explicit DensityOperator(ComplexMatrix m);

    const ComplexMatrix &mat() const { return m_; }
    int dim() const { return m_.dim(); }
    cplx operator()(int r, int c) const { return m_(r, c); }
    double purity() const;

  private:
    ComplexMatrix m_;
};

// Off-diagonal part of a state: exact zeros on the diagonal, Hermitian.
class CoherencePart {
  public:
    explicit CoherencePart(ComplexMatrix m);
    const ComplexMatrix &mat() const { return m_; }

  private:
    ComplexMatrix m_;
};

class PureKet {
  public:
    /// Requires unit norm within kNormTol.
    explicit PureKet(std::vector<cplx> amps);
    /// Normalizes arbitrary nonzero amplitudes.
    static PureKet normalized(std::vector<cplx> amps);
    static PureKet basis(int dim, int index);

    int dim() const { return static_cast<int>(amps_.size()); }
    std::span<const cplx> amps() const { return amps_; }
    DensityOperator projector() const;

  private:
    std::vector<cplx> amps_;
};

class UnitaryOp {
  public:
    /// Checks U†U = I entrywise within kNormTol.
    explicit UnitaryOp(ComplexMatrix m);

    const ComplexMatrix &mat() const { return m_; }
    int dim() const { return m_.dim(); }
    UnitaryOp adjoint() const;
    /// U ρ U†
    DensityOperator conjugate(const DensityOperator &rho) const;

    friend UnitaryOp operator*(const UnitaryOp &a, const UnitaryOp &b);

  private:
    ComplexMatrix m_;
};

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const;
};

namespace gates {
UnitaryOp identity(int dim = 2);
UnitaryOp pauli_x();
UnitaryOp pauli_y();
UnitaryOp pauli_z();
UnitaryOp hadamard();
} // namespace gates

/// ρ_B = tr_A ρ_AB.
DensityOperator partial_trace_a(const DensityOperator &rho_ab);
/// Partial trace over Alice for an arbitrary 4x4 matrix (no validation).
ComplexMatrix partial_trace_a(const ComplexMatrix &m);

/// |s> = (|0> + e^{iφ}|1>)/√2
PureKet equatorial_target(double phi);

/// tr(ρ |s><s|) for the equatorial target at phase φ.
double fidelity_with_target(const DensityOperator &rho, double phi);

struct DiagCohSplit {
    DensityOperator diagonal;
    CoherencePart coherence;
};

/// ρ = ρ_d + ρ_c with ρ_d the diagonal part in the computational basis.
DiagCohSplit decompose_diag_coh(const DensityOperator &rho);

BlochVector bloch_vector(const DensityOperator &rho);

} // namespace rspv
