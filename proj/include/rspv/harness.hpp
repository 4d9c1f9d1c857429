// harness.hpp
// Table producers behind the command-line tool: the eight-phase measured table, phase
// and noise sweeps, and the property-suite verification report.

#pragma once

#include "rspv/qmat.hpp"
#include "rspv/sampling.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rspv::harness {

inline constexpr std::string_view kVersion = "0.1.0";

/// Rows are stored as optional cells; an empty cell is written as NA (CSV) or null (JSON).
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::optional<double>>> rows;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();

    /// Index of a column; throws std::out_of_range when absent.
    std::size_t column(const std::string &name) const;
    std::optional<double> at(std::size_t row, const std::string &name) const;
};

/// Leading "# key=value" metadata lines, a header row, then unquoted numbers
/// in shortest round-trip form.
std::string to_csv(const Table &t);
/// {"metadata": {...}, "columns": [...], "rows": [{col: value|null}, ...]}
std::string to_json(const Table &t);

enum class StateKind { PsiMinus, RhoP };
enum class ChannelKind { UDagger, Hadamard };

struct StateSpec {
    StateKind kind = StateKind::RhoP;
    double p1 = 0.1;
    double p2 = 0.2;

    DensityOperator build() const;
    std::string label() const;
};

/// Measured fidelities and witnesses, rows at 0°, 45°, ..., 315°.
struct MeasuredRow {
    double phi_deg, f_conditional, f_marginal, w_conditional, w_marginal;
};
const std::vector<MeasuredRow> &measured_table1();

/// ρ_noise under the ideal protocol at the eight measured phases, next to the measured values.
Table cmd_table1(const std::optional<ShotConfig> &cfg);

struct SweepPhiOptions {
    StateSpec state;
    int n = 8;
    ChannelKind verifier = ChannelKind::Hadamard;
    std::optional<int> q; // both q when empty
    bool discord = false;
};

/// Uniform phase grid φ_k = 2πk/n. Metadata carries the equator average of
/// the established coherence quantum benefit per q.
Table cmd_sweep_phi(const SweepPhiOptions &opts, const std::optional<ShotConfig> &cfg);

/// Rectangular (p1, p2) grid with ΔW at φ, geometric discord and an
/// admissibility flag. Requires 0 < p_step ≤ 0.25.
Table cmd_sweep_noise(double p_step, double phi, const std::optional<ShotConfig> &cfg);

struct SuiteResult {
    std::string name;
    std::size_t samples = 0;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct VerifyOptions {
    std::uint64_t seed = 20240501;
    std::uint64_t shots = 1'000'000;
    /// Which of Alice's bits triggers Bob's correction; 1 injects a protocol fault.
    int correction_bit = 0;
};

struct VerifyReport {
    std::vector<SuiteResult> suites;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    bool passed() const;
    std::string to_json() const;
};

VerifyReport cmd_verify(const VerifyOptions &opts);

} // namespace rspv::harness
