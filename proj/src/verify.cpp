#include "rspv/verify.hpp"

#include "rspv/protocol.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rspv {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_qubit(const DensityOperator &rho, const char *what) {
    if (rho.dim() != 2)
        throw std::invalid_argument(std::string(what) + " needs a single-qubit state");
}

void require_pair(const DensityOperator &rho, const char *what) {
    if (rho.dim() != 4)
        throw std::invalid_argument(std::string(what) + " needs a two-qubit state");
}

void require_q(int q) {
    if (q != 0 && q != 1)
        throw std::invalid_argument("q must be 0 or 1");
}

template <class F> double periodic_mean(F &&f, int n) {
    if (n < 1)
        throw std::invalid_argument("need at least one sample");
    double s = 0.0;
    for (int k = 0; k < n; ++k)
        s += f(kTwoPi * k / n);
    return s / n;
}

const std::array<ComplexMatrix, 3> &paulis() {
    static const std::array<ComplexMatrix, 3> p = {gates::pauli_x().mat(), gates::pauli_y().mat(),
                                                   gates::pauli_z().mat()};
    return p;
}

} // namespace

std::array<double, 2> reference_populations(const UnitaryOp &channel, int q) {
    require_q(q);
    if (channel.dim() != 2)
        throw std::invalid_argument("verifier channel must be single-qubit");
    // <q|C†|j><j|C|q> = |C_jq|²
    const auto &c = channel.mat();
    return {std::norm(c(0, q)), std::norm(c(1, q))};
}

bool is_incoherent_channel(const UnitaryOp &channel, double tol) {
    // C†|j> is a basis vector iff row j of C has a unit-modulus entry.
    const auto &c = channel.mat();
    for (int j = 0; j < c.dim(); ++j) {
        double best = 0.0;
        for (int k = 0; k < c.dim(); ++k)
            best = std::max(best, std::norm(c(j, k)));
        if (best < 1.0 - tol)
            return false;
    }
    return true;
}

WitnessReport witness(const DensityOperator &rho, const UnitaryOp &channel, int q) {
    require_qubit(rho, "witness");
    require_q(q);
    if (channel.dim() != 2)
        throw std::invalid_argument("verifier channel must be single-qubit");
    if (is_incoherent_channel(channel))
        throw std::invalid_argument("verifier channel creates no coherence; the witness would vanish identically");
    const auto omega = reference_populations(channel, q);
    WitnessReport r;
    r.q = q;
    const auto &c = channel.mat();
    r.incoherent_term = rho(0, 0).real() * omega[0] + rho(1, 1).real() * omega[1];
    // <q|C†ρC|q> split into its diagonal part and the cross term carried by ρ01.
    r.coherent_term = r.incoherent_term + 2.0 * (std::conj(c(0, q)) * rho(0, 1) * c(1, q)).real();
    r.value = r.coherent_term - r.incoherent_term;
    return r;
}

double payoff(const DensityOperator &rho_ab, double phi) {
    require_pair(rho_ab, "payoff");
    return fidelity_with_target(rsp_output_closed_form(rho_ab, phi), phi) -
           fidelity_with_target(partial_trace_a(rho_ab), phi);
}

double payoff_entry_formula(const DensityOperator &rho_ab, double phi) {
    require_pair(rho_ab, "payoff_entry_formula");
    const auto &r = rho_ab.mat();
    const cplx e = std::polar(1.0, phi);
    const cplx e2 = e * e;
    const cplx bracket = r(2, 1) + r(1, 2) + e2 * r(0, 3) + std::conj(e2) * r(3, 0) + e * (r(0, 1) + r(2, 3)) +
                         std::conj(e) * (r(1, 0) + r(3, 2));
    return -0.5 * bracket.real();
}

double payoff_avg(const DensityOperator &rho_ab) {
    require_pair(rho_ab, "payoff_avg");
    return -0.5 * (rho_ab(1, 2) + rho_ab(2, 1)).real();
}

double payoff_avg_numeric(const DensityOperator &rho_ab, int n) {
    return periodic_mean([&](double phi) { return payoff(rho_ab, phi); }, n);
}

Enhancement coherence_enhancement(const DensityOperator &rho_ab, double phi) {
    require_pair(rho_ab, "coherence_enhancement");
    const UnitaryOp u = target_unitary(phi);
    Enhancement e;
    e.witness_conditional = witness(rsp_output_closed_form(rho_ab, phi), u, 0).value;
    e.witness_marginal = witness(partial_trace_a(rho_ab), u, 0).value;
    e.value = e.witness_conditional - e.witness_marginal;
    e.valid = e.witness_conditional > 0.0;
    return e;
}

double enhancement_avg(const DensityOperator &rho_ab) {
    require_pair(rho_ab, "enhancement_avg");
    return -0.5 * (rho_ab(1, 2) + rho_ab(2, 1)).real();
}

double enhancement_avg_numeric(const DensityOperator &rho_ab, int n) {
    return periodic_mean([&](double phi) { return coherence_enhancement(rho_ab, phi).value; }, n);
}

double CqbVerdict::magnitude() const {
    if (delta_gt)
        return *delta_gt;
    if (delta_lt)
        return *delta_lt;
    return 0.0;
}

CqbVerdict cqb(const DensityOperator &rho_tilde, const DensityOperator &rho_b, const UnitaryOp &channel, int q,
               double tol) {
    CqbVerdict v;
    v.witness_tilde = witness(rho_tilde, channel, q).value;
    v.witness_marginal = witness(rho_b, channel, q).value;
    if (v.witness_tilde > tol) {
        v.delta_gt = v.witness_tilde - v.witness_marginal;
        v.established = true;
    } else if (v.witness_tilde < -tol) {
        v.delta_lt = v.witness_marginal - v.witness_tilde;
        v.established = true;
    }
    return v;
}

double cqb_equator_average(const DensityOperator &rho_ab, const UnitaryOp &channel, int q, int n_samples) {
    require_pair(rho_ab, "cqb_equator_average");
    if (n_samples < 8)
        throw std::invalid_argument("cqb_equator_average needs at least 8 samples");
    const DensityOperator rho_b = partial_trace_a(rho_ab);
    return periodic_mean(
        [&](double phi) { return cqb(rsp_output_closed_form(rho_ab, phi), rho_b, channel, q).magnitude(); },
        n_samples);
}

CorrelationData correlation_data(const DensityOperator &rho_ab) {
    require_pair(rho_ab, "correlation_data");
    const auto &p = paulis();
    const ComplexMatrix id = ComplexMatrix::identity(2);
    CorrelationData c;
    for (std::size_t i = 0; i < 3; ++i) {
        c.alice[i] = (rho_ab.mat() * tensor(p[i], id)).trace().real();
        c.bob[i] = (rho_ab.mat() * tensor(id, p[i])).trace().real();
        for (std::size_t j = 0; j < 3; ++j)
            c.t[i][j] = (rho_ab.mat() * tensor(p[i], p[j])).trace().real();
    }
    return c;
}

double geometric_discord(const DensityOperator &rho_ab) {
    const CorrelationData c = correlation_data(rho_ab);
    Eigen::Vector3d x(c.alice[0], c.alice[1], c.alice[2]);
    Eigen::Matrix3d t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            t(i, j) = c.t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    const Eigen::Matrix3d k = x * x.transpose() + t * t.transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(k, Eigen::EigenvaluesOnly);
    const double d = 0.25 * (x.squaredNorm() + t.squaredNorm() - solver.eigenvalues()(2));
    return std::max(d, 0.0);
}

} // namespace rspv
