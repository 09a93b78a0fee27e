#include "qsta/distribution.hpp"

#include <numeric>
#include <stdexcept>

namespace qsta {

std::vector<std::size_t> assign_channels(std::size_t m, std::size_t k) {
    if (m < 1 || k < 1) throw std::invalid_argument("assign_channels needs m >= 1 and k >= 1");
    std::vector<std::size_t> assignment(m);
    for (std::size_t i = 0; i < m; ++i) assignment[i] = i % k;
    return assignment;
}

DistributionBlockDelays distribution_block_delays(const DelayProfile& profile, ns_t t_ebit,
                                                  bool channel_resets) {
    Instruction gen = make_ebit_cx(0, 1);
    if (t_ebit >= 0) gen.duration_override = t_ebit;
    Instruction fix_x = make_x(0);
    fix_x.condition = {0};
    Instruction fix_z = make_z(0);
    fix_z.condition = {0};

    DistributionBlockDelays d;
    d.g_first = delay_of(make_ebit_h(0), profile) + delay_of(gen, profile);
    d.g_steady = (channel_resets ? delay_of(make_reset(0), profile) : 0) + d.g_first;
    d.s = delay_of(make_cx(0, 1), profile) + delay_of(make_measure(0, 0), profile) +
          delay_of(fix_x, profile);
    d.e = delay_of(make_h(0), profile) + delay_of(make_measure(0, 0), profile) +
          delay_of(fix_z, profile);
    return d;
}

DistributedZeroIdleCheck check_distributed_zero_idle(const ShorDesignSpec& spec,
                                                     const DelayProfile& profile,
                                                     const DistributedLayout& layout) {
    if (layout.k < 1) throw std::invalid_argument("layout needs k >= 1");
    const std::vector<ns_t> cu = resolve_cu_delays(spec, profile);
    const ns_t gse =
        distribution_block_delays(profile, layout.t_ebit, layout.channel_resets).gse_steady();

    DistributedZeroIdleCheck check;
    // Channel of CU_i is next needed by CU_{i+k}; its E, G and S must fit
    // under the k-1 CU blocks in between. With k = 1 the window is empty.
    for (std::size_t i = 0; i + layout.k < spec.m; ++i) {
        ns_t window = 0;
        for (std::size_t j = 1; j < layout.k; ++j) window += cu[i + j];
        check.window_margins.push_back(window - gse);
        if (window < gse) check.exact_ok = false;
    }

    const double mean =
        static_cast<double>(std::accumulate(cu.begin(), cu.end(), ns_t{0})) /
        static_cast<double>(spec.m);
    check.relaxed_margin = static_cast<double>(layout.k - 1) * mean - static_cast<double>(gse);
    check.relaxed_ok = check.relaxed_margin >= 0.0;
    return check;
}

DistributionBounds distribution_delay_bounds(const ShorDesignSpec& spec,
                                             const DelayProfile& profile,
                                             const DistributedLayout& layout) {
    const DistributionBlockDelays d =
        distribution_block_delays(profile, layout.t_ebit, layout.channel_resets);
    DistributionBounds bounds;
    bounds.delta_D_notM = d.gse_first();
    bounds.delta_D_M_upper = static_cast<ns_t>(spec.m - 1) * d.gse_steady();
    return bounds;
}

}  // namespace qsta
