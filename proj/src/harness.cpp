#include "rspv/harness.hpp"

#include "rspv/noise.hpp"
#include "rspv/optics.hpp"
#include "rspv/protocol.hpp"
#include "rspv/random_states.hpp"
#include "rspv/verify.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace rspv::harness {

namespace {

constexpr double kPi = std::numbers::pi;

double deg_to_rad(double deg) { return deg * kPi / 180.0; }

std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string meta_value(const nlohmann::ordered_json &v) {
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

void stamp_common_meta(Table &t, const std::optional<ShotConfig> &cfg) {
    t.meta["version"] = kVersion;
    t.meta["mode"] = cfg ? "sampled" : "exact";
    if (cfg) {
        t.meta["shots"] = cfg->shots;
        t.meta["seed"] = cfg->seed;
        t.meta["generator"] = kGeneratorName;
    }
}

std::vector<int> q_values(const std::optional<int> &q) {
    if (!q)
        return {0, 1};
    if (*q != 0 && *q != 1)
        throw std::invalid_argument("q must be 0 or 1");
    return {*q};
}

UnitaryOp verifier_channel(ChannelKind kind, double phi) {
    return kind == ChannelKind::Hadamard ? gates::hadamard() : target_unitary(phi);
}

struct SuiteTracker {
    SuiteResult r;
    SuiteTracker(std::string name, double tol) {
        r.name = std::move(name);
        r.tolerance = tol;
    }
    void add(double deviation) {
        ++r.samples;
        r.max_deviation = std::isnan(deviation) ? INFINITY : std::max(r.max_deviation, deviation);
    }
    SuiteResult finish() {
        r.passed = r.samples > 0 && r.max_deviation <= r.tolerance;
        return r;
    }
};

} // namespace

std::size_t Table::column(const std::string &name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end())
        throw std::out_of_range("no column named " + name);
    return static_cast<std::size_t>(it - columns.begin());
}

std::optional<double> Table::at(std::size_t row, const std::string &name) const { return rows.at(row)[column(name)]; }

std::string to_csv(const Table &t) {
    std::ostringstream os;
    for (const auto &[k, v] : t.meta.items())
        os << "# " << k << '=' << meta_value(v) << '\n';
    for (std::size_t c = 0; c < t.columns.size(); ++c)
        os << (c ? "," : "") << t.columns[c];
    os << '\n';
    for (const auto &row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            os << (c ? "," : "") << (row[c] ? format_number(*row[c]) : "NA");
        os << '\n';
    }
    return os.str();
}

std::string to_json(const Table &t) {
    nlohmann::ordered_json j;
    j["metadata"] = t.meta;
    j["columns"] = t.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto &row : t.rows) {
        nlohmann::ordered_json r = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < row.size(); ++c)
            r[t.columns[c]] = row[c] ? nlohmann::ordered_json(*row[c]) : nlohmann::ordered_json(nullptr);
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

DensityOperator StateSpec::build() const {
    if (kind == StateKind::PsiMinus)
        return epr_psi_minus();
    return rho_p(NoiseParams(p1, p2));
}

std::string StateSpec::label() const {
    if (kind == StateKind::PsiMinus)
        return "psi-minus";
    return "rho-p(" + format_number(p1) + "," + format_number(p2) + ")";
}

const std::vector<MeasuredRow> &measured_table1() {
    static const std::vector<MeasuredRow> rows = {
        {0, 0.8439, 0.4954, 0.3489, 0.0011},   {45, 0.8427, 0.4993, 0.3463, 0.0017},
        {90, 0.8412, 0.4941, 0.3457, 0.0012},  {135, 0.8433, 0.4957, 0.3486, 0.0015},
        {180, 0.8452, 0.4982, 0.3488, 0.0011}, {225, 0.8465, 0.4991, 0.3464, 0.0013},
        {270, 0.8456, 0.4975, 0.3491, 0.0012}, {315, 0.8479, 0.4989, 0.3494, 0.0011},
    };
    return rows;
}

Table cmd_table1(const std::optional<ShotConfig> &cfg) {
    if (cfg)
        cfg->validate();
    Table t;
    t.columns = {"phi_deg", "F_BA", "F_B", "W_BA", "W_B", "P", "dW", "measured_F_BA", "measured_F_B", "measured_W_BA",
                 "measured_W_B"};
    if (cfg)
        for (const char *c : {"F_BA", "F_B", "W_BA", "W_B"}) {
            t.columns.push_back(std::string(c) + "_est");
            t.columns.push_back(std::string(c) + "_se");
        }
    stamp_common_meta(t, cfg);
    t.meta["state"] = "rho-p(0.1,0.2)";
    t.meta["channel"] = "u-dagger";
    t.meta["q"] = 0;
    t.meta["reported_source_fidelity"] = 0.9917;
    t.meta["source_fidelity_note"] = "quoted as (0.9917 +/- 0.0010)%, read as a fraction";

    const DensityOperator rho = rho_noise();
    const DensityOperator marginal = partial_trace_a(rho);
    const auto &measured = measured_table1();
    for (std::size_t k = 0; k < measured.size(); ++k) {
        const double phi = deg_to_rad(measured[k].phi_deg);
        const DensityOperator conditional = rsp_output_closed_form(rho, phi);
        const UnitaryOp u = target_unitary(phi);
        const double f_ba = fidelity_with_target(conditional, phi);
        const double f_b = fidelity_with_target(marginal, phi);
        const double w_ba = witness(conditional, u, 0).value;
        const double w_b = witness(marginal, u, 0).value;
        std::vector<std::optional<double>> row = {measured[k].phi_deg,
                                                  f_ba,
                                                  f_b,
                                                  w_ba,
                                                  w_b,
                                                  payoff(rho, phi),
                                                  coherence_enhancement(rho, phi).value,
                                                  measured[k].f_conditional,
                                                  measured[k].f_marginal,
                                                  measured[k].w_conditional,
                                                  measured[k].w_marginal};
        if (cfg) {
            ShotSampler sampler(*cfg, k);
            for (const Estimate &e :
                 {estimate_population(f_ba, sampler), estimate_population(f_b, sampler),
                  estimate_witness(conditional, u, 0, sampler), estimate_witness(marginal, u, 0, sampler)}) {
                row.push_back(e.value);
                row.push_back(e.standard_error);
            }
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table cmd_sweep_phi(const SweepPhiOptions &opts, const std::optional<ShotConfig> &cfg) {
    if (opts.n < 2)
        throw std::invalid_argument("sweep-phi needs n >= 2");
    if (cfg)
        cfg->validate();
    const std::vector<int> qs = q_values(opts.q);
    const DensityOperator rho = opts.state.build();
    const DensityOperator marginal = partial_trace_a(rho);

    Table t;
    t.columns = {"phi_deg", "P", "dW", "dW_valid"};
    for (int q : qs)
        for (const char *c : {"W_BA", "W_B", "dWgt", "dWlt"})
            t.columns.push_back(std::string(c) + "_q" + std::to_string(q));
    if (opts.discord)
        t.columns.push_back("D");
    if (cfg) {
        for (const char *c : {"P", "dW"}) {
            t.columns.push_back(std::string(c) + "_est");
            t.columns.push_back(std::string(c) + "_se");
        }
        for (int q : qs)
            for (const char *c : {"W_BA", "W_B"}) {
                const std::string base = std::string(c) + "_q" + std::to_string(q);
                t.columns.push_back(base + "_est");
                t.columns.push_back(base + "_se");
            }
    }
    stamp_common_meta(t, cfg);
    t.meta["state"] = opts.state.label();
    t.meta["n"] = opts.n;
    t.meta["channel"] = opts.verifier == ChannelKind::Hadamard ? "hadamard" : "u-dagger";

    const std::optional<double> discord =
        opts.discord ? std::optional<double>(geometric_discord(rho)) : std::nullopt;
    std::vector<double> magnitude_sum(2, 0.0);
    for (int k = 0; k < opts.n; ++k) {
        const double phi = 2.0 * kPi * k / opts.n;
        const DensityOperator conditional = rsp_output_closed_form(rho, phi);
        const UnitaryOp channel = verifier_channel(opts.verifier, phi);
        const Enhancement dw = coherence_enhancement(rho, phi);
        std::vector<std::optional<double>> row = {360.0 * k / opts.n, payoff(rho, phi), dw.value,
                                                  dw.valid ? 1.0 : 0.0};
        for (int q : qs) {
            const CqbVerdict v = cqb(conditional, marginal, channel, q);
            row.insert(row.end(), {v.witness_tilde, v.witness_marginal, v.delta_gt, v.delta_lt});
            magnitude_sum[static_cast<std::size_t>(q)] += v.magnitude();
        }
        if (opts.discord)
            row.push_back(discord);
        if (cfg) {
            ShotSampler sampler(*cfg, static_cast<std::uint64_t>(k));
            const UnitaryOp u = target_unitary(phi);
            const Estimate f_ba = estimate_population(fidelity_with_target(conditional, phi), sampler);
            const Estimate f_b = estimate_population(fidelity_with_target(marginal, phi), sampler);
            const Estimate w_ba = estimate_witness(conditional, u, 0, sampler);
            const Estimate w_b = estimate_witness(marginal, u, 0, sampler);
            row.insert(row.end(), {f_ba.value - f_b.value, std::hypot(f_ba.standard_error, f_b.standard_error),
                                   w_ba.value - w_b.value, std::hypot(w_ba.standard_error, w_b.standard_error)});
            for (int q : qs) {
                const Estimate a = estimate_witness(conditional, channel, q, sampler);
                const Estimate b = estimate_witness(marginal, channel, q, sampler);
                row.insert(row.end(), {a.value, a.standard_error, b.value, b.standard_error});
            }
        }
        t.rows.push_back(std::move(row));
    }
    for (int q : qs) {
        const std::string key = "equator_average_q" + std::to_string(q);
        if (opts.verifier == ChannelKind::Hadamard && opts.n >= 8)
            t.meta[key] = cqb_equator_average(rho, gates::hadamard(), q, opts.n);
        else
            t.meta[key] = magnitude_sum[static_cast<std::size_t>(q)] / opts.n;
    }
    return t;
}

Table cmd_sweep_noise(double p_step, double phi, const std::optional<ShotConfig> &cfg) {
    if (!(p_step > 0.0 && p_step <= 0.25))
        throw std::invalid_argument("p-step must lie in (0, 0.25]");
    if (cfg)
        cfg->validate();
    const std::vector<double> grid = unit_grid(p_step);
    const auto cells = payoff_surface(grid, grid, phi);

    Table t;
    t.columns = {"p1", "p2", "admissible", "dW", "dW_valid", "dW_closed_form", "D"};
    if (cfg) {
        t.columns.push_back("dW_est");
        t.columns.push_back("dW_se");
    }
    stamp_common_meta(t, cfg);
    t.meta["p_step"] = p_step;
    t.meta["phi_deg"] = phi * 180.0 / kPi;
    t.meta["grid_points"] = grid.size();

    const UnitaryOp u = target_unitary(phi);
    for (std::size_t k = 0; k < cells.size(); ++k) {
        const SurfaceCell &c = cells[k];
        std::vector<std::optional<double>> row = {c.p1, c.p2, c.admissible ? 1.0 : 0.0};
        if (!c.admissible) {
            row.resize(t.columns.size(), std::nullopt);
            t.rows.push_back(std::move(row));
            continue;
        }
        const DensityOperator rho = rho_p(NoiseParams(c.p1, c.p2));
        row.insert(row.end(), {c.delta_w, c.valid ? 1.0 : 0.0, (1.0 - c.p1 - c.p2) / 2.0, geometric_discord(rho)});
        if (cfg) {
            ShotSampler sampler(*cfg, k);
            const Estimate a = estimate_witness(rsp_output_closed_form(rho, phi), u, 0, sampler);
            const Estimate b = estimate_witness(partial_trace_a(rho), u, 0, sampler);
            row.insert(row.end(), {a.value - b.value, std::hypot(a.standard_error, b.standard_error)});
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

bool VerifyReport::passed() const {
    return !suites.empty() && std::all_of(suites.begin(), suites.end(), [](const SuiteResult &s) { return s.passed; });
}

std::string VerifyReport::to_json() const {
    nlohmann::ordered_json j;
    j["metadata"] = meta;
    auto arr = nlohmann::ordered_json::array();
    for (const SuiteResult &s : suites)
        arr.push_back({{"name", s.name},
                       {"samples", s.samples},
                       {"max_deviation", s.max_deviation},
                       {"tolerance", s.tolerance},
                       {"passed", s.passed}});
    j["suites"] = std::move(arr);
    j["passed"] = passed();
    return j.dump(2) + "\n";
}

VerifyReport cmd_verify(const VerifyOptions &opts) {
    if (opts.correction_bit != 0 && opts.correction_bit != 1)
        throw std::invalid_argument("correction bit must be 0 or 1");
    VerifyReport report;
    report.meta["version"] = kVersion;
    report.meta["seed"] = opts.seed;
    report.meta["shots"] = opts.shots;
    report.meta["generator"] = kGeneratorName;
    report.meta["correction_bit"] = opts.correction_bit;

    auto spec_for = [&](double phi) {
        RspChannelSpec s = RspChannelSpec::ideal(phi);
        s.correction_bit = opts.correction_bit;
        return s;
    };

    {
        // Payoff against the enhancement measured on the protocol's actual output.
        StateSampler gen(substream_seed(opts.seed, 1));
        SuiteTracker eq("equivalence_payoff_enhancement", 1e-10);
        SuiteTracker fw("fidelity_witness_relation", 1e-10);
        for (int i = 0; i < 1000; ++i) {
            const DensityOperator rho = gen.random_state();
            const double phi = gen.random_phase();
            const DensityOperator conditional = rsp_output_operational(rho, spec_for(phi));
            const DensityOperator marginal = partial_trace_a(rho);
            const UnitaryOp u = target_unitary(phi);
            const double w_ba = witness(conditional, u, 0).value;
            const double w_b = witness(marginal, u, 0).value;
            eq.add(std::abs(payoff(rho, phi) - (w_ba - w_b)));
            fw.add(std::max(std::abs(fidelity_with_target(conditional, phi) - (w_ba + 0.5)),
                            std::abs(fidelity_with_target(marginal, phi) - (w_b + 0.5))));
        }
        report.suites.push_back(eq.finish());
        report.suites.push_back(fw.finish());
    }
    {
        StateSampler gen(substream_seed(opts.seed, 2));
        SuiteTracker s("operational_vs_closed_form", 1e-10);
        SuiteTracker prob("alice_probabilities_sum", 1e-10);
        for (int i = 0; i < 500; ++i) {
            const DensityOperator rho = gen.random_state();
            const double phi = gen.random_phase();
            const RspChannelSpec spec = spec_for(phi);
            s.add(frobenius_distance(rsp_output_operational(rho, spec).mat(), rsp_output_closed_form(rho, phi).mat()));
            const auto out = alice_measure(rho, spec);
            prob.add(std::abs(out[0].probability + out[1].probability - 1.0));
        }
        report.suites.push_back(s.finish());
        report.suites.push_back(prob.finish());
    }
    {
        StateSampler gen(substream_seed(opts.seed, 3));
        SuiteTracker s("payoff_entry_formula", 1e-10);
        for (int i = 0; i < 500; ++i) {
            const DensityOperator rho = gen.random_state();
            const double phi = gen.random_phase();
            s.add(std::abs(payoff(rho, phi) - payoff_entry_formula(rho, phi)));
        }
        report.suites.push_back(s.finish());
    }
    {
        StateSampler gen(substream_seed(opts.seed, 4));
        SuiteTracker num("average_formulas_vs_integration", 1e-9);
        SuiteTracker same("payoff_avg_equals_enhancement_avg", 0.0);
        std::vector<DensityOperator> states = {epr_psi_minus(), rho_noise()};
        for (int i = 0; i < 100; ++i)
            states.push_back(gen.random_state());
        for (const DensityOperator &rho : states) {
            num.add(std::abs(payoff_avg(rho) - payoff_avg_numeric(rho, 360)));
            num.add(std::abs(enhancement_avg(rho) - enhancement_avg_numeric(rho, 360)));
            same.add(payoff_avg(rho) == enhancement_avg(rho) ? 0.0 : 1.0);
        }
        report.suites.push_back(num.finish());
        report.suites.push_back(same.finish());
    }
    {
        StateSampler gen(substream_seed(opts.seed, 5));
        SuiteTracker balance("witness_population_balance", 1e-10);
        SuiteTracker incoherent("witness_zero_on_incoherent_states", 0.0);
        SuiteTracker excl("cqb_single_branch", 0.0);
        for (int i = 0; i < 500; ++i) {
            const DensityOperator rho = gen.random_state(2);
            const UnitaryOp c = gen.random_unitary();
            if (is_incoherent_channel(c, 1e-6))
                continue;
            balance.add(std::abs(witness(rho, c, 0).value + witness(rho, c, 1).value));
            const DensityOperator diag = gen.random_incoherent_state(2);
            incoherent.add(std::max(std::abs(witness(diag, c, 0).value), std::abs(witness(diag, c, 1).value)));
            const CqbVerdict v = cqb(rho, gen.random_state(2), c, i % 2);
            const bool ok = !(v.delta_gt && v.delta_lt) && (v.established == (v.delta_gt || v.delta_lt));
            excl.add(ok ? 0.0 : 1.0);
        }
        report.suites.push_back(balance.finish());
        report.suites.push_back(incoherent.finish());
        report.suites.push_back(excl.finish());
    }
    {
        SuiteTracker shifter("optics_qhq_phase_shifter", 1e-10);
        SuiteTracker udag("optics_u_dagger_realization", 1e-10);
        for (int k = 0; k < 64; ++k) {
            const double a = 2.0 * kPi * k / 64.0;
            const UnitaryOp target(ComplexMatrix(2, {1.0, 0.0, 0.0, std::polar(1.0, a)}));
            shifter.add(optics::equal_up_to_global_phase(optics::qhq_phase_shifter(a), target, 1e-10) ? 0.0 : 1.0);
            udag.add(optics::equal_up_to_global_phase(optics::u_dagger_realization(a), target_unitary(a).adjoint(),
                                                      1e-10)
                         ? 0.0
                         : 1.0);
        }
        report.suites.push_back(shifter.finish());
        report.suites.push_back(udag.finish());
    }
    {
        SuiteTracker s("noise_surface_closed_form", 1e-12);
        const std::vector<double> grid = unit_grid(0.05);
        for (const SurfaceCell &c : payoff_surface(grid, grid, 0.0))
            if (c.admissible)
                s.add(std::abs(*c.delta_w - (1.0 - c.p1 - c.p2) / 2.0));
        report.suites.push_back(s.finish());
    }
    {
        StateSampler gen(substream_seed(opts.seed, 6));
        SuiteTracker s("geometric_discord_anchors", 1e-9);
        s.add(std::abs(geometric_discord(epr_psi_minus()) - 0.5));
        s.add(std::abs(geometric_discord(DensityOperator(ComplexMatrix::identity(4) * cplx{0.25}))));
        for (int i = 0; i < 100; ++i) {
            s.add(geometric_discord(gen.random_incoherent_state(4)));
            s.add(std::max(0.0, -geometric_discord(gen.random_state())));
        }
        report.suites.push_back(s.finish());
    }
    {
        // Sampled witness against the analytic value, in units of the propagated error.
        SuiteTracker s("sampled_vs_exact_witness_sigma", 4.0);
        const ShotConfig cfg{opts.shots, opts.seed};
        const DensityOperator rho = rho_noise();
        std::uint64_t stream = 0;
        for (int k = 0; k < 8; ++k) {
            const double phi = kPi * k / 4.0;
            const DensityOperator conditional = rsp_output_closed_form(rho, phi);
            for (const UnitaryOp &c : {target_unitary(phi), gates::hadamard()}) {
                ShotSampler sampler(cfg, stream++);
                const Estimate e = estimate_witness(conditional, c, 0, sampler);
                const double exact = witness(conditional, c, 0).value;
                s.add(e.standard_error > 0.0 ? std::abs(e.value - exact) / e.standard_error
                                             : (e.value == exact ? 0.0 : INFINITY));
            }
        }
        report.suites.push_back(s.finish());
    }
    return report;
}

} // namespace rspv::harness
