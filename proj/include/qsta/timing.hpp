#pragma once

#include <cstddef>
#include <vector>

#include "qsta/circuit.hpp"
#include "qsta/graph.hpp"
#include "qsta/profile.hpp"

namespace qsta {

/// ASAP schedule. An instruction starts as soon as every bit it touches is
/// free; conditioned instructions wait an extra t_classical_ff after their
/// dependencies, so end - start is the bare execution time while the end
/// times match the per-bit running-time recurrence exactly.
struct Schedule {
    std::vector<ns_t> start;
    std::vector<ns_t> end;
    ns_t makespan = 0;
};

/// Circuit delay t_C via the per-bit running-time array over the
/// topologically sorted instruction list. Memory is proportional to the
/// bit count only.
ns_t circuit_delay(const Circuit& circuit, const DelayProfile& profile);

/// Exact longest Sc~>Sk path by topological-order dynamic programming over
/// the explicit weighted graph. Independent route used to cross-check
/// circuit_delay; ties at each predecessor choice resolve to the smallest
/// instruction index. The returned path lists instruction indices, dummies
/// excluded.
struct LongestPath {
    ns_t delay = 0;
    std::vector<std::size_t> path;
};
LongestPath longest_path_oracle(const WeightedCircuitGraph& wdag);

Schedule asap_schedule(const Circuit& circuit, const DelayProfile& profile);

/// A path achieving t_C, as instruction indices. Deterministic: at each
/// predecessor choice the earliest instruction index wins.
std::vector<std::size_t> critical_path(const Circuit& circuit, const DelayProfile& profile);

/// Idle time of one qubit inside its active window: (last end - first
/// start) minus the busy time of its instructions. Unused qubits idle 0.
ns_t qubit_idle_time(const Circuit& circuit, const Schedule& schedule, std::size_t qubit);

/// Register idle: max over the given qubits.
ns_t idle_time(const Circuit& circuit, const DelayProfile& profile,
               const std::vector<std::size_t>& qubits);

}  // namespace qsta
