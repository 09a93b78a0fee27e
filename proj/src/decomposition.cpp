#include "qsta/decomposition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "qsta/distribution.hpp"
#include "qsta/graph.hpp"
#include "qsta/timing.hpp"

namespace qsta {

namespace {

// Intrinsic delay of an instruction subsequence: the per-bit running-time
// recurrence restricted to the block, i.e. the block's own critical path.
ns_t block_delay(const Circuit& circuit, const std::vector<std::size_t>& members,
                 const DelayProfile& profile) {
    std::map<std::size_t, ns_t> bit_time;  // global bit index -> time
    ns_t total = 0;
    for (std::size_t idx : members) {
        const Instruction& instr = circuit.instructions()[idx];
        const ns_t t_i = delay_of(instr, profile);
        ns_t t_max = 0;
        auto visit = [&](std::size_t bit) { t_max = std::max(t_max, bit_time[bit]); };
        for (std::size_t q : instr.qubits) visit(q);
        for (std::size_t c : instr.clbits) visit(circuit.num_qubits() + c);
        for (std::size_t c : instr.condition) visit(circuit.num_qubits() + c);
        const ns_t t_end = t_max + t_i;
        auto update = [&](std::size_t bit) { bit_time[bit] = t_end; };
        for (std::size_t q : instr.qubits) update(q);
        for (std::size_t c : instr.clbits) update(circuit.num_qubits() + c);
        for (std::size_t c : instr.condition) update(circuit.num_qubits() + c);
        total = std::max(total, t_end);
    }
    return total;
}

bool has_prefix(const std::string& tag, const char* prefix) {
    return tag.rfind(prefix, 0) == 0;
}

}  // namespace

TimingReport shor_delay_decomposition(const ShorCircuit& design, const DelayProfile& profile) {
    const Circuit& circuit = design.circuit;
    if (design.m == 0) throw std::invalid_argument("design metadata missing");

    TimingReport report;
    report.distributed = design.dist.has_value();
    const Schedule schedule = asap_schedule(circuit, profile);
    report.t_C = schedule.makespan;
    report.depth = circuit_depth(circuit);
    report.critical_path = critical_path(circuit, profile);
    report.idle.resize(circuit.num_qubits());
    for (std::size_t q = 0; q < circuit.num_qubits(); ++q) {
        report.idle[q] = qubit_idle_time(circuit, schedule, q);
        if (circuit.role(q) == QubitRole::Work)
            report.idle_work = std::max(report.idle_work, report.idle[q]);
    }

    // Gather the builder's block annotations.
    std::size_t init_index = circuit.size();
    std::map<std::size_t, std::vector<std::size_t>> cu_members;
    for (std::size_t i = 0; i < circuit.size(); ++i) {
        const std::string& tag = circuit.instructions()[i].tag;
        if (tag == "init" && init_index == circuit.size()) init_index = i;
        if (has_prefix(tag, "cu:"))
            cu_members[std::stoul(tag.substr(3))].push_back(i);
    }
    if (init_index == circuit.size() || cu_members.size() != design.m)
        throw std::invalid_argument("circuit lacks the design block annotations");

    DelayDecomposition& d = report.decomposition;
    d.t_H = delay_of(circuit.instructions()[init_index], profile);
    for (const auto& [i, members] : cu_members)
        d.sum_CU += block_delay(circuit, members, profile);

    if (design.dist) {
        ns_t t_ebit = design.dist->channels.empty() ? -1 : design.dist->channels[0].t_ebit;
        const DistributionBlockDelays blocks =
            distribution_block_delays(profile, t_ebit, design.dist->channel_resets);
        for (std::size_t idx : report.critical_path) {
            const std::string& tag = circuit.instructions()[idx].tag;
            if (has_prefix(tag, "g:") || has_prefix(tag, "s:") || has_prefix(tag, "e:"))
                d.delta_D += delay_of(circuit.instructions()[idx], profile);
        }
        d.delta_D_notM = std::min(blocks.gse_first(), d.delta_D);
        d.delta_D_M = d.delta_D - d.delta_D_notM;
        report.bounds.delta_D_M_upper =
            static_cast<ns_t>(design.m - 1) * blocks.gse_steady();
    }

    d.delta_P = report.t_C - d.t_H - d.sum_CU - d.delta_D;
    const ns_t last_block = phase_block_delay(profile, design.phase_mode, design.m - 1);
    d.delta_P_notM = std::min(last_block, d.delta_P);
    d.delta_P_M = d.delta_P - d.delta_P_notM;

    for (std::size_t i = 0; i + 1 < design.m; ++i)
        report.bounds.delta_P_M_upper += phase_block_delay(profile, design.phase_mode, i);
    report.bounds.delta_P_M_upper_relaxed = static_cast<ns_t>(design.m - 1) * last_block;
    return report;
}

}  // namespace qsta
