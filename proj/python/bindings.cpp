// Python bindings. Matrices cross the boundary as complex128 numpy arrays;
// tables and reports come back as CSV or JSON text.

#include "rspv/harness.hpp"
#include "rspv/noise.hpp"
#include "rspv/optics.hpp"
#include "rspv/protocol.hpp"
#include "rspv/sampling.hpp"
#include "rspv/verify.hpp"

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <numbers>

namespace py = pybind11;
using namespace rspv;

namespace {

using CArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const CArray &a) {
    if (a.ndim() != 2 || a.shape(0) != a.shape(1))
        throw std::invalid_argument("expected a square 2-D array");
    const auto n = static_cast<int>(a.shape(0));
    return ComplexMatrix(n, std::span<const cplx>(a.data(), static_cast<std::size_t>(n * n)));
}

CArray to_array(const ComplexMatrix &m) {
    const auto n = static_cast<py::ssize_t>(m.dim());
    CArray out({n, n});
    std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
    return out;
}

DensityOperator density(const CArray &a) { return DensityOperator(to_matrix(a)); }
UnitaryOp unitary(const CArray &a) { return UnitaryOp(to_matrix(a)); }

std::optional<ShotConfig> shot_config(std::optional<std::uint64_t> shots, std::uint64_t seed) {
    if (!shots)
        return std::nullopt;
    return ShotConfig{*shots, seed};
}

std::string render(const harness::Table &t, const std::string &format) {
    if (format == "csv")
        return harness::to_csv(t);
    if (format == "json")
        return harness::to_json(t);
    throw std::invalid_argument("format must be 'csv' or 'json'");
}

py::dict witness_dict(const WitnessReport &w) {
    py::dict d;
    d["value"] = w.value;
    d["coherent_term"] = w.coherent_term;
    d["incoherent_term"] = w.incoherent_term;
    d["q"] = w.q;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Two-qubit remote state preparation verification core";
    m.attr("__version__") = std::string(harness::kVersion);

    // States and gates.
    m.def("epr_psi_minus", [] { return to_array(epr_psi_minus().mat()); });
    m.def("rho_p", [](double p1, double p2) { return to_array(rho_p(NoiseParams(p1, p2)).mat()); }, py::arg("p1"),
          py::arg("p2"));
    m.def("rho_noise", [] { return to_array(rho_noise().mat()); });
    m.def("target_unitary", [](double phi) { return to_array(target_unitary(phi).mat()); }, py::arg("phi"));
    m.def("hadamard", [] { return to_array(gates::hadamard().mat()); });

    // Matrix utilities.
    m.def("partial_trace_a", [](const CArray &rho) { return to_array(partial_trace_a(density(rho)).mat()); });
    m.def("fidelity_with_target", [](const CArray &rho, double phi) { return fidelity_with_target(density(rho), phi); },
          py::arg("rho"), py::arg("phi"));
    m.def("bloch_vector", [](const CArray &rho) {
        const BlochVector b = bloch_vector(density(rho));
        return py::make_tuple(b.x, b.y, b.z);
    });
    m.def("frobenius_distance",
          [](const CArray &a, const CArray &b) { return frobenius_distance(to_matrix(a), to_matrix(b)); });

    // Protocol.
    m.def(
        "alice_measure",
        [](const CArray &rho, double phi) {
            py::list out;
            for (const RspOutcome &o : alice_measure(density(rho), RspChannelSpec::ideal(phi)))
                out.append(py::make_tuple(o.alice_bit, o.probability,
                                          o.bob_state ? py::object(to_array(o.bob_state->mat())) : py::none()));
            return out;
        },
        py::arg("rho"), py::arg("phi"));
    m.def(
        "rsp_output_operational",
        [](const CArray &rho, double phi, int correction_bit) {
            RspChannelSpec spec = RspChannelSpec::ideal(phi);
            spec.correction_bit = correction_bit;
            return to_array(rsp_output_operational(density(rho), spec).mat());
        },
        py::arg("rho"), py::arg("phi"), py::arg("correction_bit") = 0);
    m.def("rsp_output_closed_form",
          [](const CArray &rho, double phi) { return to_array(rsp_output_closed_form(density(rho), phi).mat()); },
          py::arg("rho"), py::arg("phi"));

    // Verification functionals.
    m.def(
        "witness", [](const CArray &rho, const CArray &channel, int q) {
            return witness_dict(witness(density(rho), unitary(channel), q));
        },
        py::arg("rho"), py::arg("channel"), py::arg("q") = 0);
    m.def("payoff", [](const CArray &rho, double phi) { return payoff(density(rho), phi); }, py::arg("rho"),
          py::arg("phi"));
    m.def("payoff_entry_formula", [](const CArray &rho, double phi) { return payoff_entry_formula(density(rho), phi); },
          py::arg("rho"), py::arg("phi"));
    m.def("payoff_avg", [](const CArray &rho) { return payoff_avg(density(rho)); });
    m.def("enhancement_avg", [](const CArray &rho) { return enhancement_avg(density(rho)); });
    m.def(
        "coherence_enhancement",
        [](const CArray &rho, double phi) {
            const Enhancement e = coherence_enhancement(density(rho), phi);
            return py::make_tuple(e.value, e.valid);
        },
        py::arg("rho"), py::arg("phi"));
    m.def(
        "cqb",
        [](const CArray &rho_tilde, const CArray &rho_b, const CArray &channel, int q) {
            const CqbVerdict v = cqb(density(rho_tilde), density(rho_b), unitary(channel), q);
            py::dict d;
            d["delta_gt"] = v.delta_gt;
            d["delta_lt"] = v.delta_lt;
            d["established"] = v.established;
            d["witness_tilde"] = v.witness_tilde;
            d["witness_marginal"] = v.witness_marginal;
            return d;
        },
        py::arg("rho_tilde"), py::arg("rho_b"), py::arg("channel"), py::arg("q") = 0);
    m.def(
        "cqb_equator_average",
        [](const CArray &rho, const CArray &channel, int q, int n) {
            return cqb_equator_average(density(rho), unitary(channel), q, n);
        },
        py::arg("rho"), py::arg("channel"), py::arg("q") = 0, py::arg("n") = 360);
    m.def("geometric_discord", [](const CArray &rho) { return geometric_discord(density(rho)); });

    // Optics.
    m.def("jones_hwp", [](double a) { return to_array(optics::jones_hwp(a).mat()); }, py::arg("angle"));
    m.def("jones_qwp", [](double a) { return to_array(optics::jones_qwp(a).mat()); }, py::arg("angle"));
    m.def("qhq_phase_shifter", [](double t) { return to_array(optics::qhq_phase_shifter(t).mat()); },
          py::arg("theta"));
    m.def("u_dagger_realization", [](double phi) { return to_array(optics::u_dagger_realization(phi).mat()); },
          py::arg("phi"));
    m.def(
        "equal_up_to_global_phase",
        [](const CArray &a, const CArray &b, double tol) {
            return optics::equal_up_to_global_phase(unitary(a), unitary(b), tol);
        },
        py::arg("a"), py::arg("b"), py::arg("tol") = 1e-10);

    // Sampling.
    m.def(
        "sample_counts",
        [](double p, std::uint64_t shots, std::uint64_t seed) { return sample_counts(p, ShotConfig{shots, seed}); },
        py::arg("probability"), py::arg("shots"), py::arg("seed") = 0);
    m.def(
        "estimate_witness",
        [](const CArray &rho, const CArray &channel, int q, std::optional<std::uint64_t> shots, std::uint64_t seed) {
            const Estimate e = estimate_witness(density(rho), unitary(channel), q, shot_config(shots, seed));
            return py::make_tuple(e.value, e.standard_error);
        },
        py::arg("rho"), py::arg("channel"), py::arg("q") = 0, py::arg("shots") = py::none(), py::arg("seed") = 0);

    // Harness commands.
    m.def(
        "table1",
        [](std::optional<std::uint64_t> shots, std::uint64_t seed, const std::string &format) {
            return render(harness::cmd_table1(shot_config(shots, seed)), format);
        },
        py::arg("shots") = py::none(), py::arg("seed") = 20240501, py::arg("format") = "csv");
    m.def(
        "sweep_phi",
        [](const std::string &state, double p1, double p2, int n, const std::string &channel, std::optional<int> q,
           bool discord, std::optional<std::uint64_t> shots, std::uint64_t seed, const std::string &format) {
            harness::SweepPhiOptions o;
            if (state != "psi-minus" && state != "rho-p")
                throw std::invalid_argument("state must be 'psi-minus' or 'rho-p'");
            if (channel != "hadamard" && channel != "u-dagger")
                throw std::invalid_argument("channel must be 'hadamard' or 'u-dagger'");
            o.state = {state == "psi-minus" ? harness::StateKind::PsiMinus : harness::StateKind::RhoP, p1, p2};
            o.n = n;
            o.verifier = channel == "hadamard" ? harness::ChannelKind::Hadamard : harness::ChannelKind::UDagger;
            o.q = q;
            o.discord = discord;
            return render(harness::cmd_sweep_phi(o, shot_config(shots, seed)), format);
        },
        py::arg("state") = "rho-p", py::arg("p1") = 0.1, py::arg("p2") = 0.2, py::arg("n") = 8,
        py::arg("channel") = "hadamard", py::arg("q") = py::none(), py::arg("discord") = false,
        py::arg("shots") = py::none(), py::arg("seed") = 20240501, py::arg("format") = "csv");
    m.def(
        "sweep_noise",
        [](double p_step, double phi_deg, std::optional<std::uint64_t> shots, std::uint64_t seed,
           const std::string &format) {
            return render(harness::cmd_sweep_noise(p_step, phi_deg * std::numbers::pi / 180.0, shot_config(shots, seed)),
                          format);
        },
        py::arg("p_step") = 0.05, py::arg("phi_deg") = 0.0, py::arg("shots") = py::none(), py::arg("seed") = 20240501,
        py::arg("format") = "csv");
    m.def(
        "verify",
        [](std::uint64_t shots, std::uint64_t seed, bool inject_wrong_rule) {
            harness::VerifyOptions o;
            o.shots = shots;
            o.seed = seed;
            o.correction_bit = inject_wrong_rule ? 1 : 0;
            return harness::cmd_verify(o).to_json();
        },
        py::arg("shots") = 1'000'000, py::arg("seed") = 20240501, py::arg("inject_wrong_rule") = false);
}
