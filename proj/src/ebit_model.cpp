#include "qsta/ebit_model.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace qsta {

void EbitLinkParams::validate() const {
    auto probability = [](double v, const char* what) {
        if (!(v > 0.0) || v > 1.0)
            throw std::invalid_argument(std::string(what) + " must lie in (0, 1]");
    };
    probability(p_ht, "p_ht");
    probability(nu_h, "nu_h");
    probability(nu_t, "nu_t");
    probability(nu_o, "nu_o");
    if (!(L0_km > 0.0)) throw std::invalid_argument("L0 must be positive");
    if (!(c_f_m_per_s > 0.0)) throw std::invalid_argument("c_f must be positive");
    if (d_km < 0.0) throw std::invalid_argument("link length must be non-negative");
    const double taus[] = {tau_p_us, tau_h_us, tau_t_us, tau_o_us, tau_c_us};
    for (double tau : taus)
        if (tau < 0.0) throw std::invalid_argument("durations must be non-negative");
}

double local_success_probability(const EbitLinkParams& params) {
    params.validate();
    return params.p_ht * params.nu_h * params.nu_t;
}

double end_to_end_success_probability(const EbitLinkParams& params) {
    const double p = local_success_probability(params);
    return 0.5 * params.nu_o * p * p * std::exp(-params.d_km / params.L0_km);
}

AttemptTimes attempt_times(const EbitLinkParams& params) {
    params.validate();
    // d/c_f covers the photon flight to the midpoint plus the classical
    // acknowledgement coming back.
    const double flight_us = params.d_km * 1000.0 / params.c_f_m_per_s * 1e6;
    const double photon_path = params.tau_t_us + flight_us + params.tau_o_us;
    AttemptTimes t;
    t.success_us = params.tau_p_us + std::max(params.tau_h_us, photon_path);
    t.failure_us = params.tau_p_us + std::max({params.tau_h_us, photon_path, params.tau_c_us});
    return t;
}

double expected_ebit_time_us(const EbitLinkParams& params) {
    const double p_e = end_to_end_success_probability(params);
    if (p_e <= 0.0)
        throw std::domain_error("end-to-end success probability is zero; expected time undefined");
    const AttemptTimes t = attempt_times(params);
    return (p_e * t.success_us + (1.0 - p_e) * t.failure_us) / p_e;
}

ns_t expected_ebit_time_ns(const EbitLinkParams& params) {
    return static_cast<ns_t>(std::llround(expected_ebit_time_us(params) * 1000.0));
}

EbitLinkParams neutral_atom_link(double d_km) {
    EbitLinkParams params;
    params.d_km = d_km;
    return params;
}

ns_t ebit_time_preset(const std::string& name) {
    if (name == "superconducting_fast") return 10'000;          // 10 us
    if (name == "superconducting_slow") return 1'000'000;       // 1 ms
    if (name == "ion_trap_local") return 5'500'000;             // 5.5 ms
    if (name == "ion_trap_remote_fast") return 2'000'000'000;   // 2 s
    if (name == "ion_trap_remote_slow") return 17'000'000'000;  // 17 s
    throw std::invalid_argument("unknown ebit time preset '" + name + "'");
}

std::vector<std::string> ebit_time_preset_names() {
    return {"superconducting_fast", "superconducting_slow", "ion_trap_local",
            "ion_trap_remote_fast", "ion_trap_remote_slow"};
}

EbitLinkParams load_ebit_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open ebit model file '" + path + "'");
    nlohmann::json j;
    in >> j;

    EbitLinkParams params;
    params.p_ht = j.value("p_ht", params.p_ht);
    params.nu_h = j.value("nu_h", params.nu_h);
    params.nu_t = j.value("nu_t", params.nu_t);
    params.nu_o = j.value("nu_o", params.nu_o);
    params.L0_km = j.value("L0_km", params.L0_km);
    params.d_km = j.value("d_km", params.d_km);
    params.c_f_m_per_s = j.value("c_f_m_per_s", params.c_f_m_per_s);
    params.tau_p_us = j.value("tau_p_us", params.tau_p_us);
    params.tau_h_us = j.value("tau_h_us", params.tau_h_us);
    params.tau_t_us = j.value("tau_t_us", params.tau_t_us);
    params.tau_o_us = j.value("tau_o_us", params.tau_o_us);
    params.tau_c_us = j.value("tau_c_us", params.tau_c_us);
    params.validate();
    return params;
}

}  // namespace qsta
