#pragma once

#include <vector>

#include "qsta/profile.hpp"
#include "qsta/shor_designs.hpp"

namespace qsta {

/// Split of the circuit delay into the always-serial baseline (the first
/// Hadamard and the CU chain), the phase-processing contribution delta_P
/// and, when distributed, the distribution contribution delta_D, each
/// divided into mitigatable and unavoidable parts:
///
///   t_C = t_H + sum_CU + delta_P [+ delta_D]
///   delta_P = delta_P_M + delta_P_notM
///   delta_D = delta_D_M + delta_D_notM
///
/// delta_D is the distribution-block delay on the critical path.
/// delta_P is the remainder; in regimes where CU blocks hide under
/// distribution waits it can drop below its nominal serial value (the
/// baseline charges the full CU chain regardless), so the unavoidable
/// parts are capped at the observed totals and the mitigatable parts stay
/// non-negative.
struct DelayDecomposition {
    ns_t t_H = 0;
    ns_t sum_CU = 0;
    ns_t delta_P = 0;
    ns_t delta_P_M = 0;
    ns_t delta_P_notM = 0;
    ns_t delta_D = 0;
    ns_t delta_D_M = 0;
    ns_t delta_D_notM = 0;
};

struct DecompositionBounds {
    ns_t delta_P_M_upper = 0;          // sum over i < m-1 of t(P_i H M R H)
    ns_t delta_P_M_upper_relaxed = 0;  // (m-1) * t(P_{m-1} H M R H)
    ns_t delta_D_M_upper = 0;          // (m-1) * t(GSE), distributed only
};

struct TimingReport {
    ns_t t_C = 0;
    std::size_t depth = 0;
    std::vector<std::size_t> critical_path;  // instruction indices
    std::vector<ns_t> idle;                  // per qubit, inside its active window
    ns_t idle_work = 0;                      // max over the work register
    DelayDecomposition decomposition;
    DecompositionBounds bounds;
    bool distributed = false;
};

/// Full timing report for a built design. Requires the builder's block
/// annotations; throws if they are missing.
TimingReport shor_delay_decomposition(const ShorCircuit& design, const DelayProfile& profile);

}  // namespace qsta
