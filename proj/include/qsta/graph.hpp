#pragma once

#include <cstddef>
#include <vector>

#include "qsta/circuit.hpp"
#include "qsta/profile.hpp"

namespace qsta {

/// Explicit dependency DAG of a circuit. Vertices 0..n-1 are the
/// instructions in append order; vertex n is the source Sc and n+1 the
/// sink Sk. An edge (u, v) means v is the direct successor of u on some
/// shared qubit or classical bit; Sc precedes each bit's first instruction
/// and Sk succeeds each bit's last.
struct CircuitGraph {
    std::size_t num_instructions = 0;
    std::vector<std::vector<std::size_t>> succ;
    std::vector<std::vector<std::size_t>> pred;

    std::size_t source() const { return num_instructions; }
    std::size_t sink() const { return num_instructions + 1; }
    std::size_t num_vertices() const { return num_instructions + 2; }
};

/// CircuitGraph plus per-vertex delays. Every incoming edge of a vertex
/// carries that vertex's delay; edges into Sk weigh 0, so the weight
/// lookup is by head vertex.
struct WeightedCircuitGraph {
    CircuitGraph graph;
    std::vector<ns_t> vertex_delay;  // indexed like graph vertices; Sc = Sk = 0

    ns_t edge_weight(std::size_t head) const { return vertex_delay[head]; }
};

CircuitGraph build_circuit_graph(const Circuit& circuit);
WeightedCircuitGraph build_weighted_graph(const Circuit& circuit, const DelayProfile& profile);

/// Length (instruction count) of the longest Sc~>Sk path, dummies excluded.
std::size_t circuit_depth(const Circuit& circuit);

}  // namespace qsta
