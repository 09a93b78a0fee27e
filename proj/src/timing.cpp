#include "qsta/timing.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsta {

namespace {

template <typename Fn>
void for_each_bit(const Instruction& instr, std::size_t num_qubits, Fn&& fn) {
    for (std::size_t q : instr.qubits) fn(q);
    for (std::size_t c : instr.clbits) fn(num_qubits + c);
    for (std::size_t c : instr.condition) fn(num_qubits + c);
}

}  // namespace

ns_t circuit_delay(const Circuit& circuit, const DelayProfile& profile) {
    std::vector<ns_t> t(circuit.num_qubits() + circuit.num_clbits(), 0);
    ns_t t_c = 0;
    for (const Instruction& instr : circuit.instructions()) {
        const ns_t t_i = delay_of(instr, profile);
        ns_t t_max = 0;
        for_each_bit(instr, circuit.num_qubits(),
                     [&](std::size_t bit) { t_max = std::max(t_max, t[bit]); });
        const ns_t t_end = t_max + t_i;
        for_each_bit(instr, circuit.num_qubits(), [&](std::size_t bit) { t[bit] = t_end; });
        t_c = std::max(t_c, t_end);
    }
    return t_c;
}

LongestPath longest_path_oracle(const WeightedCircuitGraph& wdag) {
    const CircuitGraph& g = wdag.graph;
    const std::size_t n = g.num_vertices();
    const std::size_t kNone = static_cast<std::size_t>(-1);

    // Kahn topological order with cycle detection.
    std::vector<std::size_t> indegree(n, 0);
    for (std::size_t v = 0; v < n; ++v) indegree[v] = g.pred[v].size();
    std::vector<std::size_t> order;
    order.reserve(n);
    std::vector<std::size_t> ready;
    for (std::size_t v = 0; v < n; ++v)
        if (indegree[v] == 0) ready.push_back(v);
    while (!ready.empty()) {
        std::size_t v = ready.back();
        ready.pop_back();
        order.push_back(v);
        for (std::size_t w : g.succ[v])
            if (--indegree[w] == 0) ready.push_back(w);
    }
    if (order.size() != n) throw std::runtime_error("cycle detected in circuit graph");

    std::vector<ns_t> dist(n, 0);
    std::vector<std::size_t> best_pred(n, kNone);
    for (std::size_t v : order) {
        for (std::size_t u : g.pred[v]) {
            const ns_t d = dist[u] + wdag.edge_weight(v);
            if (d > dist[v] || (d == dist[v] && best_pred[v] != kNone && u < best_pred[v])) {
                dist[v] = d;
                best_pred[v] = u;
            } else if (best_pred[v] == kNone && d == dist[v]) {
                best_pred[v] = u;
            }
        }
    }

    LongestPath result;
    result.delay = dist[g.sink()];
    std::size_t v = g.sink();
    while (v != kNone && v != g.source()) {
        if (v != g.sink()) result.path.push_back(v);
        v = best_pred[v];
    }
    std::reverse(result.path.begin(), result.path.end());
    return result;
}

namespace {

struct ForwardPass {
    Schedule schedule;
    // For each instruction, the predecessor instruction that pinned its
    // start (smallest index among the latest-ending ones), or none.
    std::vector<std::size_t> pinned_pred;
    std::size_t last_on_path = static_cast<std::size_t>(-1);
};

ForwardPass forward_pass(const Circuit& circuit, const DelayProfile& profile) {
    const std::size_t kNone = static_cast<std::size_t>(-1);
    const std::size_t num_bits = circuit.num_qubits() + circuit.num_clbits();
    std::vector<ns_t> bit_time(num_bits, 0);
    std::vector<std::size_t> bit_last(num_bits, kNone);

    ForwardPass fp;
    fp.schedule.start.resize(circuit.size());
    fp.schedule.end.resize(circuit.size());
    fp.pinned_pred.assign(circuit.size(), kNone);

    ns_t makespan = 0;
    for (std::size_t i = 0; i < circuit.size(); ++i) {
        const Instruction& instr = circuit.instructions()[i];
        const ns_t ff = instr.conditioned() ? profile.t_classical_ff : 0;
        const ns_t busy = delay_of(instr, profile) - ff;

        ns_t dep = 0;
        std::size_t pred = kNone;
        for_each_bit(instr, circuit.num_qubits(), [&](std::size_t bit) {
            if (bit_time[bit] > dep || (bit_time[bit] == dep && bit_last[bit] != kNone &&
                                        (pred == kNone || bit_last[bit] < pred))) {
                dep = bit_time[bit];
                if (bit_time[bit] > 0 || bit_last[bit] != kNone) pred = bit_last[bit];
            }
        });
        // A zero-time dependency is indistinguishable from the circuit
        // start; drop it so paths begin at a real latest-ending pred.
        if (dep == 0) pred = kNone;

        fp.schedule.start[i] = dep + ff;
        fp.schedule.end[i] = dep + ff + busy;
        fp.pinned_pred[i] = pred;
        for_each_bit(instr, circuit.num_qubits(), [&](std::size_t bit) {
            bit_time[bit] = fp.schedule.end[i];
            bit_last[bit] = i;
        });
        if (fp.schedule.end[i] > makespan) {
            makespan = fp.schedule.end[i];
            fp.last_on_path = i;
        }
    }
    fp.schedule.makespan = makespan;
    return fp;
}

}  // namespace

Schedule asap_schedule(const Circuit& circuit, const DelayProfile& profile) {
    return forward_pass(circuit, profile).schedule;
}

std::vector<std::size_t> critical_path(const Circuit& circuit, const DelayProfile& profile) {
    const std::size_t kNone = static_cast<std::size_t>(-1);
    ForwardPass fp = forward_pass(circuit, profile);
    std::vector<std::size_t> path;
    for (std::size_t v = fp.last_on_path; v != kNone; v = fp.pinned_pred[v])
        path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

ns_t qubit_idle_time(const Circuit& circuit, const Schedule& schedule, std::size_t qubit) {
    ns_t first = 0, last = 0, busy = 0;
    bool used = false;
    for (std::size_t i = 0; i < circuit.size(); ++i) {
        const Instruction& instr = circuit.instructions()[i];
        if (std::find(instr.qubits.begin(), instr.qubits.end(), qubit) == instr.qubits.end())
            continue;
        if (!used) first = schedule.start[i];
        used = true;
        last = schedule.end[i];
        busy += schedule.end[i] - schedule.start[i];
    }
    if (!used) return 0;
    return (last - first) - busy;
}

ns_t idle_time(const Circuit& circuit, const DelayProfile& profile,
               const std::vector<std::size_t>& qubits) {
    const Schedule schedule = asap_schedule(circuit, profile);
    ns_t worst = 0;
    for (std::size_t q : qubits) worst = std::max(worst, qubit_idle_time(circuit, schedule, q));
    return worst;
}

}  // namespace qsta
