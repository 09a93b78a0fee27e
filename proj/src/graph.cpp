#include "qsta/graph.hpp"

#include <algorithm>

namespace qsta {

namespace {

// All bits an instruction touches: qubits, written clbits, condition bits.
// Condition reads chain like writes; this matches the per-bit running-time
// model, where each instruction updates every bit it involves.
template <typename Fn>
void for_each_bit(const Instruction& instr, std::size_t num_qubits, Fn&& fn) {
    for (std::size_t q : instr.qubits) fn(q);
    for (std::size_t c : instr.clbits) fn(num_qubits + c);
    for (std::size_t c : instr.condition) fn(num_qubits + c);
}

}  // namespace

CircuitGraph build_circuit_graph(const Circuit& circuit) {
    const std::size_t n = circuit.size();
    CircuitGraph g;
    g.num_instructions = n;
    g.succ.assign(n + 2, {});
    g.pred.assign(n + 2, {});

    const std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> last(circuit.num_qubits() + circuit.num_clbits(), kNone);

    auto add_edge = [&](std::size_t u, std::size_t v) {
        auto& s = g.succ[u];
        if (std::find(s.begin(), s.end(), v) == s.end()) {
            s.push_back(v);
            g.pred[v].push_back(u);
        }
    };

    for (std::size_t i = 0; i < n; ++i) {
        for_each_bit(circuit.instructions()[i], circuit.num_qubits(), [&](std::size_t bit) {
            add_edge(last[bit] == kNone ? g.source() : last[bit], i);
            last[bit] = i;
        });
    }
    for (std::size_t bit = 0; bit < last.size(); ++bit)
        if (last[bit] != kNone) add_edge(last[bit], g.sink());
    return g;
}

WeightedCircuitGraph build_weighted_graph(const Circuit& circuit, const DelayProfile& profile) {
    WeightedCircuitGraph wg;
    wg.graph = build_circuit_graph(circuit);
    wg.vertex_delay.assign(wg.graph.num_vertices(), 0);
    for (std::size_t i = 0; i < circuit.size(); ++i)
        wg.vertex_delay[i] = delay_of(circuit.instructions()[i], profile);
    return wg;
}

std::size_t circuit_depth(const Circuit& circuit) {
    std::vector<std::size_t> depth(circuit.num_qubits() + circuit.num_clbits(), 0);
    std::size_t result = 0;
    for (const Instruction& instr : circuit.instructions()) {
        std::size_t d = 0;
        for_each_bit(instr, circuit.num_qubits(),
                     [&](std::size_t bit) { d = std::max(d, depth[bit]); });
        ++d;
        for_each_bit(instr, circuit.num_qubits(), [&](std::size_t bit) { depth[bit] = d; });
        result = std::max(result, d);
    }
    return result;
}

}  // namespace qsta
