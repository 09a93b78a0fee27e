#pragma once

#include <string>
#include <vector>

#include "qsta/circuit.hpp"

namespace qsta {

/// Heralded entanglement link: both QPUs attempt local atom-photon
/// entanglement, the photons meet a Bell-state measurement at the fiber
/// midpoint, and a classical acknowledgement reports success. Durations in
/// microseconds, distances in kilometers.
struct EbitLinkParams {
    double p_ht = 0.53;   // photon generation probability
    double nu_h = 0.8;    // heralding detector efficiency
    double nu_t = 0.8;    // entangling detector efficiency
    double nu_o = 0.39;   // optical Bell-state measurement efficiency
    double L0_km = 22.0;  // fiber attenuation length
    double d_km = 1.0;    // link length
    double c_f_m_per_s = 2e8;  // light speed in fiber
    double tau_p_us = 5.9;     // qubit excitation
    double tau_h_us = 20.0;    // herald cavity
    double tau_t_us = 10.0;    // telecom cavity
    double tau_o_us = 10.0;    // optical BSM
    double tau_c_us = 100.0;   // local qubit reset after a failed attempt

    void validate() const;
};

/// p = p_ht * nu_h * nu_t
double local_success_probability(const EbitLinkParams& params);

/// p_e = 1/2 * nu_o * p^2 * exp(-d / L0)
double end_to_end_success_probability(const EbitLinkParams& params);

/// Mean durations of one successful / failed attempt:
/// T_s = tau_p + max{tau_h, tau_t + d/c_f + tau_o}
/// T_f = tau_p + max{tau_h, tau_t + d/c_f + tau_o, tau_c}
struct AttemptTimes {
    double success_us = 0.0;
    double failure_us = 0.0;
};
AttemptTimes attempt_times(const EbitLinkParams& params);

/// Expected generation time T = (p_e T_s + (1 - p_e) T_f) / p_e.
/// Throws std::domain_error when p_e is zero.
double expected_ebit_time_us(const EbitLinkParams& params);
ns_t expected_ebit_time_ns(const EbitLinkParams& params);

/// Neutral-atom link parameters; d is the only free knob.
EbitLinkParams neutral_atom_link(double d_km = 1.0);

/// Reported fixed generation times for platforms without a published
/// parameter set: superconducting_fast/slow (10 us / 1 ms), ion_trap_local
/// (5.5 ms), ion_trap_remote_fast/slow (2 s / 17 s).
ns_t ebit_time_preset(const std::string& name);
std::vector<std::string> ebit_time_preset_names();

/// JSON file with the EbitLinkParams keys (suffix _us for durations,
/// L0_km, c_f_m_per_s); d_km may be overridden per call.
EbitLinkParams load_ebit_model_file(const std::string& path);

}  // namespace qsta
