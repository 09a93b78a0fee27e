#pragma once

#include <cstddef>
#include <vector>

#include "qsta/profile.hpp"
#include "qsta/shor_designs.hpp"

namespace qsta {

/// Two-QPU split: data register on QPU A, work register on QPU B, plus k
/// ebit channels whose communication qubits are allocated after the
/// compute qubits. t_ebit < 0 defers the generation time to the analysis
/// profile; otherwise it is stamped onto the ebit_cx instructions.
/// channel_resets controls whether a reused channel resets both halves at
/// the start of its G block.
struct DistributedLayout {
    std::size_t k = 1;
    ns_t t_ebit = -1;
    bool channel_resets = true;
};

/// Round-robin channel assignment: CU block i runs on channel i mod k.
std::vector<std::size_t> assign_channels(std::size_t m, std::size_t k);

/// Builds the design with every CU^{2^i} executed remotely through the
/// EJPP telegate on its assigned channel: ebit generation G (resets on
/// channel reuse, then ebit_h + ebit_cx), starting process S (CX onto the
/// local ebit half, measure, conditioned X on the remote half), the CU
/// itself controlled by the remote half, and ending process E (H, measure,
/// conditioned Z on the data control). One ebit per CU; m ebits total.
ShorCircuit distribute(const ShorDesignSpec& spec, const DistributedLayout& layout);

/// Serial delays of the distribution blocks under a profile. `first` skips
/// the communication-qubit resets (fresh channel), `steady` includes them
/// when the layout enables channel resets.
struct DistributionBlockDelays {
    ns_t g_first = 0;
    ns_t g_steady = 0;
    ns_t s = 0;
    ns_t e = 0;

    ns_t gse_first() const { return g_first + s + e; }
    ns_t gse_steady() const { return g_steady + s + e; }
};
DistributionBlockDelays distribution_block_delays(const DelayProfile& profile, ns_t t_ebit,
                                                  bool channel_resets = true);

struct DistributedZeroIdleCheck {
    bool exact_ok = true;
    std::vector<ns_t> window_margins;  // per window start index i
    bool relaxed_ok = true;
    double relaxed_margin = 0.0;
};

/// Work-register zero-idle condition with k channels: between a CU block
/// and the next use of its channel, one full distribution block must fit
/// under the k-1 intervening CU blocks. With k = 1 no overlap is possible,
/// so the condition only holds for a free distribution block. The relaxed
/// form tests (k-1) * mean(t_CU) >= t(GSE).
DistributedZeroIdleCheck check_distributed_zero_idle(const ShorDesignSpec& spec,
                                                     const DelayProfile& profile,
                                                     const DistributedLayout& layout);

struct DistributionBounds {
    ns_t delta_D_notM = 0;   // one full distribution block, fresh channel
    ns_t delta_D_M_upper = 0;  // (m-1) * t(GSE)
};
DistributionBounds distribution_delay_bounds(const ShorDesignSpec& spec,
                                             const DelayProfile& profile,
                                             const DistributedLayout& layout);

}  // namespace qsta
