#include "qsta/profile.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace qsta {

DelayProfile DelayProfile::with_ebit(ns_t t_ebit) const {
    DelayProfile p = *this;
    p.t_ebit_h = 0;
    p.t_ebit_cx = t_ebit;
    return p;
}

DelayProfile DelayProfile::scaled(ns_t factor) const {
    DelayProfile p = *this;
    p.t_q1 *= factor;
    p.t_q2 *= factor;
    p.t_measure *= factor;
    p.t_reset *= factor;
    p.t_ebit_h *= factor;
    p.t_ebit_cx *= factor;
    p.t_classical_ff *= factor;
    for (auto& [k, v] : p.overrides) v *= factor;
    return p;
}

void DelayProfile::validate() const {
    const ns_t all[] = {t_q1, t_q2, t_measure, t_reset, t_ebit_h, t_ebit_cx, t_classical_ff};
    for (ns_t v : all)
        if (v < 0) throw std::invalid_argument("profile durations must be non-negative");
    for (const auto& [k, v] : overrides)
        if (v < 0) throw std::invalid_argument("profile override for '" + k + "' is negative");
}

ns_t delay_of(const Instruction& instr, const DelayProfile& profile) {
    ns_t base = 0;
    if (instr.duration_override) {
        base = *instr.duration_override;
    } else if (auto it = profile.overrides.find(opcode_name(instr.opcode));
               it != profile.overrides.end()) {
        base = it->second;
    } else {
        switch (instr.opcode) {
            case Opcode::H:
            case Opcode::X:
            case Opcode::Y:
            case Opcode::Z:
            case Opcode::I:
                base = profile.t_q1;
                break;
            case Opcode::P:
                base = instr.is_two_qubit() ? profile.t_q2 : profile.t_q1;
                break;
            case Opcode::CX:
                base = profile.t_q2;
                break;
            case Opcode::Measure:
                base = profile.t_measure;
                break;
            case Opcode::Reset:
                base = profile.t_reset;
                break;
            case Opcode::EbitH:
                base = profile.t_ebit_h;
                break;
            case Opcode::EbitCX:
                base = profile.t_ebit_cx;
                break;
            case Opcode::Macro:
                throw std::invalid_argument("macro '" + instr.label + "' has no delay source");
        }
    }
    if (instr.conditioned()) base += profile.t_classical_ff;
    return base;
}

DelayProfile unit_profile() {
    DelayProfile p;
    p.name = "unit";
    return p;
}

namespace {

DelayProfile make(const std::string& name, ns_t q1, ns_t q2, ns_t measure, ns_t reset) {
    DelayProfile p;
    p.name = name;
    p.t_q1 = q1;
    p.t_q2 = q2;
    p.t_measure = measure;
    p.t_reset = reset;
    return p;
}

}  // namespace

DelayProfile preset_profile(const std::string& name) {
    // Superconducting (IBM), ns.
    if (name == "eagle_sherbrooke") return make(name, 57, 533, 1216, 1276);
    if (name == "heron_r1_torino") return make(name, 32, 68, 1560, 1708);
    if (name == "heron_r2_fez") return make(name, 24, 84, 1560, 1584);
    if (name == "heron_r2_marrakesh") return make(name, 36, 68, 2100, 2236);
    // Ion trap (IonQ), converted from us.
    if (name == "aria_1") return make(name, 135'000, 600'000, 300'000, 20'000);
    if (name == "aria_2") return make(name, 135'000, 600'000, 50'000, 15'000);
    if (name == "forte") return make(name, 130'000, 970'000, 150'000, 50'000);
    // Neutral atom; reset modeled as measurement plus one single-qubit gate.
    if (name == "neutral_atom") return make(name, 2'000, 400, 10'000'000, 10'002'000);
    throw std::invalid_argument("unknown profile preset '" + name + "'");
}

std::vector<std::string> preset_profile_names() {
    return {"eagle_sherbrooke", "heron_r1_torino",  "heron_r2_fez", "heron_r2_marrakesh",
            "aria_1",           "aria_2",           "forte",        "neutral_atom"};
}

DelayProfile load_profile_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open profile file '" + path + "'");
    nlohmann::json j;
    in >> j;

    DelayProfile p;
    p.name = j.value("name", path);
    p.t_q1 = j.value("t_q1_ns", ns_t{0});
    p.t_q2 = j.value("t_q2_ns", ns_t{0});
    p.t_measure = j.value("t_measure_ns", ns_t{0});
    p.t_reset = j.value("t_reset_ns", ns_t{0});
    p.t_ebit_h = 0;
    p.t_ebit_cx = j.value("t_ebit_ns", ns_t{0});
    p.t_classical_ff = j.value("t_classical_ff_ns", ns_t{0});
    if (j.contains("overrides"))
        for (const auto& [k, v] : j.at("overrides").items())
            p.overrides[k] = v.get<ns_t>();
    p.validate();
    return p;
}

DelayProfile resolve_profile(const std::string& name_or_path) {
    if (name_or_path == "unit") return unit_profile();
    for (const auto& preset : preset_profile_names())
        if (preset == name_or_path) return preset_profile(name_or_path);
    return load_profile_file(name_or_path);
}

void save_profile_file(const DelayProfile& profile, const std::string& path) {
    nlohmann::json j;
    j["name"] = profile.name;
    j["t_q1_ns"] = profile.t_q1;
    j["t_q2_ns"] = profile.t_q2;
    j["t_measure_ns"] = profile.t_measure;
    j["t_reset_ns"] = profile.t_reset;
    j["t_ebit_ns"] = profile.t_ebit();
    j["t_classical_ff_ns"] = profile.t_classical_ff;
    if (!profile.overrides.empty()) j["overrides"] = profile.overrides;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write profile file '" + path + "'");
    out << j.dump(2) << "\n";
}

}  // namespace qsta
