#include "rspv/qmat.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rspv {

namespace {

void check_dim(int dim) {
    if (dim != 1 && dim != 2 && dim != 4)
        throw std::invalid_argument("matrix dimension must be 1, 2 or 4, got " + std::to_string(dim));
}

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b, const char *what) {
    if (a.dim() != b.dim())
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) +
                                    " vs " + std::to_string(b.dim()) + ")");
}

} // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) { check_dim(dim); }

ComplexMatrix::ComplexMatrix(int dim, std::initializer_list<cplx> row_major)
    : ComplexMatrix(dim, std::span<const cplx>(row_major.begin(), row_major.size())) {}

ComplexMatrix::ComplexMatrix(int dim, std::span<const cplx> row_major) : dim_(dim) {
    check_dim(dim);
    if (row_major.size() != static_cast<std::size_t>(dim * dim))
        throw std::invalid_argument("expected " + std::to_string(dim * dim) + " entries, got " +
                                    std::to_string(row_major.size()));
    std::copy(row_major.begin(), row_major.end(), a_.begin());
    if (!is_finite())
        throw std::invalid_argument("matrix entries must be finite");
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i)
        m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> diag) {
    ComplexMatrix m(static_cast<int>(diag.size()));
    for (int i = 0; i < m.dim(); ++i)
        m(i, i) = diag[static_cast<std::size_t>(i)];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            r(i, j) = std::conj((*this)(j, i));
    return r;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < dim_; ++i)
        t += (*this)(i, i);
    return t;
}

bool ComplexMatrix::is_finite() const {
    return std::all_of(entries().begin(), entries().end(),
                       [](cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &o) {
    require_same_dim(*this, o, "matrix addition");
    for (int k = 0; k < dim_ * dim_; ++k)
        a_[static_cast<std::size_t>(k)] += o.a_[static_cast<std::size_t>(k)];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &o) {
    require_same_dim(*this, o, "matrix subtraction");
    for (int k = 0; k < dim_ * dim_; ++k)
        a_[static_cast<std::size_t>(k)] -= o.a_[static_cast<std::size_t>(k)];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(cplx s) {
    for (int k = 0; k < dim_ * dim_; ++k)
        a_[static_cast<std::size_t>(k)] *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "matrix product");
    const int n = a.dim();
    ComplexMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const cplx aik = a(i, k);
            for (int j = 0; j < n; ++j)
                r(i, j) += aik * b(k, j);
        }
    return r;
}

bool operator==(const ComplexMatrix &a, const ComplexMatrix &b) {
    return a.dim() == b.dim() && std::equal(a.entries().begin(), a.entries().end(), b.entries().begin());
}

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
    const int na = a.dim(), nb = b.dim();
    if (na * nb > 4)
        throw std::invalid_argument("tensor product of dim " + std::to_string(na) + " and " + std::to_string(nb) +
                                    " exceeds the two-qubit limit");
    ComplexMatrix r(na * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j)
            for (int k = 0; k < nb; ++k)
                for (int l = 0; l < nb; ++l)
                    r(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
    return r;
}

double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "frobenius_distance");
    double s = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k)
        s += std::norm(a.entries()[k] - b.entries()[k]);
    return std::sqrt(s);
}

bool is_hermitian(const ComplexMatrix &m, double tol) {
    for (int i = 0; i < m.dim(); ++i)
        for (int j = i; j < m.dim(); ++j)
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tol)
                return false;
    return true;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m) {
    switch (m.dim()) {
    case 1:
        return {m(0, 0).real()};
    case 2: {
        const double a = m(0, 0).real(), d = m(1, 1).real();
        const double half_gap = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(m(0, 1)));
        const double mid = 0.5 * (a + d);
        return {mid - half_gap, mid + half_gap};
    }
    default: {
        Eigen::Matrix4cd e;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                e(i, j) = m(i, j);
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(e, Eigen::EigenvaluesOnly);
        const auto &ev = solver.eigenvalues();
        return {ev(0), ev(1), ev(2), ev(3)};
    }
    }
}

DensityOperator::DensityOperator(ComplexMatrix m) : m_(m) {
    if (m_.dim() != 2 && m_.dim() != 4)
        throw std::invalid_argument("density operator must be 2x2 or 4x4");
    if (!m_.is_finite())
        throw std::invalid_argument("density operator has non-finite entries");
    if (!is_hermitian(m_))
        throw std::invalid_argument("density operator is not Hermitian");
    const cplx t = m_.trace();
    if (std::abs(t - 1.0) > kNormTol)
        throw std::invalid_argument("density operator trace " + std::to_string(t.real()) + " is not 1");
    const auto ev = hermitian_eigenvalues(m_);
    if (ev.front() < -kPsdTol)
        throw std::invalid_argument("density operator has negative eigenvalue " + std::to_string(ev.front()));
}

double DensityOperator::purity() const { return (m_ * m_).trace().real(); }

CoherencePart::CoherencePart(ComplexMatrix m) : m_(m) {
    for (int i = 0; i < m_.dim(); ++i)
        if (m_(i, i) != cplx{0.0, 0.0})
            throw std::invalid_argument("coherence part must have an exactly zero diagonal");
    if (!is_hermitian(m_))
        throw std::invalid_argument("coherence part is not Hermitian");
}

PureKet::PureKet(std::vector<cplx> amps) : amps_(std::move(amps)) {
    if (amps_.size() != 2 && amps_.size() != 4)
        throw std::invalid_argument("ket dimension must be 2 or 4");
    double n2 = 0.0;
    for (cplx z : amps_)
        n2 += std::norm(z);
    if (!std::isfinite(n2) || std::abs(std::sqrt(n2) - 1.0) > kNormTol)
        throw std::invalid_argument("ket is not normalized");
}

PureKet PureKet::normalized(std::vector<cplx> amps) {
    double n2 = 0.0;
    for (cplx z : amps)
        n2 += std::norm(z);
    if (!(n2 > 0.0) || !std::isfinite(n2))
        throw std::invalid_argument("cannot normalize a zero or non-finite vector");
    const double inv = 1.0 / std::sqrt(n2);
    for (cplx &z : amps)
        z *= inv;
    return PureKet(std::move(amps));
}

PureKet PureKet::basis(int dim, int index) {
    if (index < 0 || index >= dim)
        throw std::invalid_argument("basis index out of range");
    std::vector<cplx> v(static_cast<std::size_t>(dim), 0.0);
    v[static_cast<std::size_t>(index)] = 1.0;
    return PureKet(std::move(v));
}

DensityOperator PureKet::projector() const {
    ComplexMatrix m(dim());
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            m(i, j) = amps_[static_cast<std::size_t>(i)] * std::conj(amps_[static_cast<std::size_t>(j)]);
    return DensityOperator(m);
}

UnitaryOp::UnitaryOp(ComplexMatrix m) : m_(m) {
    if (!m_.is_finite())
        throw std::invalid_argument("unitary has non-finite entries");
    const ComplexMatrix g = m_.adjoint() * m_;
    const ComplexMatrix id = ComplexMatrix::identity(m_.dim());
    for (std::size_t k = 0; k < g.entries().size(); ++k)
        if (std::abs(g.entries()[k] - id.entries()[k]) > kNormTol)
            throw std::invalid_argument("matrix is not unitary");
}

UnitaryOp UnitaryOp::adjoint() const { return UnitaryOp(m_.adjoint()); }

DensityOperator UnitaryOp::conjugate(const DensityOperator &rho) const {
    return DensityOperator(m_ * rho.mat() * m_.adjoint());
}

UnitaryOp operator*(const UnitaryOp &a, const UnitaryOp &b) { return UnitaryOp(a.m_ * b.m_); }

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

namespace gates {

UnitaryOp identity(int dim) { return UnitaryOp(ComplexMatrix::identity(dim)); }
UnitaryOp pauli_x() { return UnitaryOp(ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0})); }
UnitaryOp pauli_y() { return UnitaryOp(ComplexMatrix(2, {0.0, cplx{0, -1}, cplx{0, 1}, 0.0})); }
UnitaryOp pauli_z() { return UnitaryOp(ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0})); }
UnitaryOp hadamard() {
    const double h = std::numbers::sqrt2 / 2.0;
    return UnitaryOp(ComplexMatrix(2, {h, h, h, -h}));
}

} // namespace gates

ComplexMatrix partial_trace_a(const ComplexMatrix &m) {
    if (m.dim() != 4)
        throw std::invalid_argument("partial trace needs a 4x4 matrix");
    ComplexMatrix r(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r(i, j) = m(i, j) + m(2 + i, 2 + j);
    return r;
}

DensityOperator partial_trace_a(const DensityOperator &rho_ab) {
    if (rho_ab.dim() != 4)
        throw std::invalid_argument("partial_trace_a needs a two-qubit state");
    return DensityOperator(partial_trace_a(rho_ab.mat()));
}

PureKet equatorial_target(double phi) {
    const double h = std::numbers::sqrt2 / 2.0;
    return PureKet({h, h * std::polar(1.0, phi)});
}

double fidelity_with_target(const DensityOperator &rho, double phi) {
    if (rho.dim() != 2)
        throw std::invalid_argument("fidelity_with_target needs a single-qubit state");
    // <s|ρ|s> = (ρ00 + ρ11)/2 + Re(e^{iφ} ρ01)
    const cplx e = std::polar(1.0, phi);
    return 0.5 * (rho(0, 0).real() + rho(1, 1).real()) + (e * rho(0, 1)).real();
}

DiagCohSplit decompose_diag_coh(const DensityOperator &rho) {
    ComplexMatrix d(rho.dim());
    for (int i = 0; i < rho.dim(); ++i)
        d(i, i) = rho(i, i);
    ComplexMatrix c = rho.mat() - d;
    return {DensityOperator(d), CoherencePart(c)};
}

BlochVector bloch_vector(const DensityOperator &rho) {
    if (rho.dim() != 2)
        throw std::invalid_argument("bloch_vector needs a single-qubit state");
    return {2.0 * rho(0, 1).real(), -2.0 * rho(0, 1).imag(), (rho(0, 0) - rho(1, 1)).real()};
}

} // namespace rspv
