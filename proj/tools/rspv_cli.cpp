// rspv: reproduce the RSP verification tables and run the property suites.
//
//   rspv table1 [--shots N --seed S] [--format csv|json] [--out path]
//   rspv sweep-phi --state rho-p --p1 0.1 --p2 0.2 --n 360 --channel hadamard
//   rspv sweep-noise --p-step 0.05 --phi-deg 0
//   rspv verify [--shots N --seed S]
//
// Exit status: 0 success, 1 verification failure, 2 usage error.

#include "rspv/harness.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct CommonFlags {
    std::string state = "rho-p";
    double p1 = 0.1;
    double p2 = 0.2;
    double phi_deg = 0.0;
    int n = 8;
    double p_step = 0.05;
    std::optional<std::uint64_t> shots;
    std::uint64_t seed = 20240501;
    std::string channel = "hadamard";
    std::optional<int> q;
    std::string out;
    std::string format = "csv";
    bool discord = false;
    bool inject_wrong_rule = false;
};

void add_common(CLI::App *cmd, CommonFlags &f) {
    cmd->add_option("--state", f.state, "shared state")->check(CLI::IsMember({"psi-minus", "rho-p"}));
    cmd->add_option("--p1", f.p1, "|00> noise weight for rho-p")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--p2", f.p2, "|11> noise weight for rho-p")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--phi-deg", f.phi_deg, "target phase in degrees");
    cmd->add_option("--n", f.n, "number of phase samples")->check(CLI::Range(2, 1'000'000));
    cmd->add_option("--p-step", f.p_step, "noise grid step");
    cmd->add_option("--shots", f.shots, "photon pairs per measurement setting (omit for exact mode)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", f.seed, "random seed");
    cmd->add_option("--channel", f.channel, "verifier channel")->check(CLI::IsMember({"u-dagger", "hadamard"}));
    cmd->add_option("--q", f.q, "witness output state")->check(CLI::IsMember({0, 1}));
    cmd->add_option("--out", f.out, "output file (stdout when omitted)");
    cmd->add_option("--format", f.format, "output format")->check(CLI::IsMember({"csv", "json"}));
}

std::optional<rspv::ShotConfig> shot_config(const CommonFlags &f) {
    if (!f.shots)
        return std::nullopt;
    return rspv::ShotConfig{*f.shots, f.seed};
}

void emit(const std::string &text, const std::string &path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw std::runtime_error("cannot open " + path + " for writing");
    os << text;
}

void emit_table(const rspv::harness::Table &t, const CommonFlags &f) {
    emit(f.format == "json" ? rspv::harness::to_json(t) : rspv::harness::to_csv(t), f.out);
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Remote state preparation verification: payoff, coherence witnesses, sweeps"};
    app.require_subcommand(1);
    CommonFlags flags;

    auto *table1 = app.add_subcommand("table1", "Fidelities and witnesses for rho_noise at the eight measured phases");
    auto *sweep_phi = app.add_subcommand("sweep-phi", "Payoff, enhancement and coherence quantum benefits over phase");
    auto *sweep_noise = app.add_subcommand("sweep-noise", "Enhancement and geometric discord over the noise grid");
    auto *verify = app.add_subcommand("verify", "Run every property suite and print a JSON report");
    for (auto *cmd : {table1, sweep_phi, sweep_noise, verify})
        add_common(cmd, flags);
    sweep_phi->add_flag("--discord", flags.discord, "add a geometric discord column");
    verify->add_flag("--inject-wrong-rule", flags.inject_wrong_rule,
                     "correct on Alice's bit 1 instead of 0 (the equivalence suites should fail)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    using namespace rspv::harness;
    try {
        if (*table1) {
            emit_table(cmd_table1(shot_config(flags)), flags);
        } else if (*sweep_phi) {
            SweepPhiOptions opts;
            opts.state = {flags.state == "psi-minus" ? StateKind::PsiMinus : StateKind::RhoP, flags.p1, flags.p2};
            opts.n = flags.n;
            opts.verifier = flags.channel == "u-dagger" ? ChannelKind::UDagger : ChannelKind::Hadamard;
            opts.q = flags.q;
            opts.discord = flags.discord;
            emit_table(cmd_sweep_phi(opts, shot_config(flags)), flags);
        } else if (*sweep_noise) {
            emit_table(cmd_sweep_noise(flags.p_step, flags.phi_deg * std::numbers::pi / 180.0, shot_config(flags)),
                       flags);
        } else if (*verify) {
            VerifyOptions opts;
            opts.seed = flags.seed;
            if (flags.shots)
                opts.shots = *flags.shots;
            opts.correction_bit = flags.inject_wrong_rule ? 1 : 0;
            const VerifyReport report = cmd_verify(opts);
            emit(report.to_json(), flags.out);
            return report.passed() ? 0 : kExitVerifyFailed;
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
