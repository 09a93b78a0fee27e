#pragma once

#include <map>
#include <string>
#include <vector>

#include "qsta/circuit.hpp"

namespace qsta {

/// Per-opcode durations in integer nanoseconds. The ebit generation time is
/// split as t_ebit_h + t_ebit_cx; by convention the full time sits on the
/// CX half (t_ebit_h = 0), keeping both channel qubits occupied for the
/// whole generation.
struct DelayProfile {
    std::string name = "unit";
    ns_t t_q1 = 1;
    ns_t t_q2 = 1;
    ns_t t_measure = 1;
    ns_t t_reset = 1;
    ns_t t_ebit_h = 0;
    ns_t t_ebit_cx = 0;
    ns_t t_classical_ff = 0;
    std::map<std::string, ns_t> overrides;  // opcode name -> ns

    ns_t t_ebit() const { return t_ebit_h + t_ebit_cx; }

    /// Copy with the ebit generation time replaced (kept on the CX half).
    DelayProfile with_ebit(ns_t t_ebit) const;
    DelayProfile scaled(ns_t factor) const;

    void validate() const;
};

/// Resolved duration of one instruction: duration_override, else the
/// profile's opcode override, else the opcode class default. Conditioned
/// instructions add t_classical_ff on top.
ns_t delay_of(const Instruction& instr, const DelayProfile& profile);

/// All-ones profile, handy in tests.
DelayProfile unit_profile();

/// Bundled hardware presets: eagle_sherbrooke, heron_r1_torino,
/// heron_r2_fez, heron_r2_marrakesh, aria_1, aria_2, forte, neutral_atom.
DelayProfile preset_profile(const std::string& name);
std::vector<std::string> preset_profile_names();

/// Loads a profile from a JSON file with keys {name, t_q1_ns, t_q2_ns,
/// t_measure_ns, t_reset_ns, t_ebit_ns, t_classical_ff_ns, overrides}.
DelayProfile load_profile_file(const std::string& path);

/// Preset name first, file path as fallback.
DelayProfile resolve_profile(const std::string& name_or_path);

void save_profile_file(const DelayProfile& profile, const std::string& path);

}  // namespace qsta
