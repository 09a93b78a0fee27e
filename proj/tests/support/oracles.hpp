#pragma once

// Test-only oracles and generators. Everything here is independent of the
// implementation paths it cross-checks: the path enumerator walks the
// explicit DAG recursively, and the ebit-time oracle simulates the attempt
// process directly.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "qsta/circuit.hpp"
#include "qsta/ebit_model.hpp"
#include "qsta/graph.hpp"
#include "qsta/profile.hpp"

namespace qsta::testing {

inline DelayProfile random_profile(std::mt19937_64& rng) {
    std::uniform_int_distribution<ns_t> dur(1, 1000);
    DelayProfile p;
    p.name = "random";
    p.t_q1 = dur(rng);
    p.t_q2 = dur(rng);
    p.t_measure = dur(rng);
    p.t_reset = dur(rng);
    p.t_ebit_h = 0;
    p.t_ebit_cx = dur(rng);
    std::uniform_int_distribution<int> coin(0, 3);
    p.t_classical_ff = coin(rng) == 0 ? dur(rng) : 0;
    return p;
}

inline Circuit random_circuit(std::mt19937_64& rng, std::size_t max_qubits = 10,
                              std::size_t max_clbits = 4, std::size_t max_instructions = 100) {
    std::uniform_int_distribution<std::size_t> nq_dist(1, max_qubits);
    std::uniform_int_distribution<std::size_t> nc_dist(0, max_clbits);
    const std::size_t nq = nq_dist(rng);
    const std::size_t nc = nc_dist(rng);
    std::uniform_int_distribution<std::size_t> count_dist(0, max_instructions);
    const std::size_t count = count_dist(rng);

    Circuit circuit("random", nq, nc);
    std::uniform_int_distribution<std::size_t> qubit(0, nq - 1);
    std::uniform_int_distribution<int> pick(0, 9);
    std::uniform_int_distribution<int> percent(0, 99);
    std::uniform_int_distribution<ns_t> dur(1, 1000);
    std::uniform_real_distribution<double> angle(-3.14159, 3.14159);

    for (std::size_t i = 0; i < count; ++i) {
        Instruction instr;
        switch (pick(rng)) {
            case 0: instr = make_h(qubit(rng)); break;
            case 1: instr = make_x(qubit(rng)); break;
            case 2: instr = make_y(qubit(rng)); break;
            case 3: instr = make_z(qubit(rng)); break;
            case 4: instr = make_p(angle(rng), qubit(rng)); break;
            case 5:
                if (nq >= 2) {
                    std::size_t a = qubit(rng), b = qubit(rng);
                    while (b == a) b = qubit(rng);
                    instr = make_cx(a, b);
                } else {
                    instr = make_x(0);
                }
                break;
            case 6:
                if (nc > 0) {
                    std::uniform_int_distribution<std::size_t> clbit(0, nc - 1);
                    instr = make_measure(qubit(rng), clbit(rng));
                } else {
                    instr = make_h(qubit(rng));
                }
                break;
            case 7: instr = make_reset(qubit(rng)); break;
            case 8: {
                std::uniform_int_distribution<std::size_t> span_dist(1, std::min<std::size_t>(3, nq));
                const std::size_t span = span_dist(rng);
                std::vector<std::size_t> qs;
                while (qs.size() < span) {
                    std::size_t q = qubit(rng);
                    if (std::find(qs.begin(), qs.end(), q) == qs.end()) qs.push_back(q);
                }
                instr = make_macro("M" + std::to_string(i), qs, dur(rng));
                break;
            }
            default: instr = make_i(qubit(rng)); break;
        }
        if (nc > 0 && instr.opcode != Opcode::Measure && percent(rng) < 25) {
            std::uniform_int_distribution<std::size_t> clbit(0, nc - 1);
            instr.condition = {clbit(rng)};
            if (percent(rng) < 30) instr.condition.push_back(clbit(rng));
        }
        if (instr.opcode != Opcode::Macro && percent(rng) < 20) instr.duration_override = dur(rng);
        circuit.append(std::move(instr));
    }
    return circuit;
}

/// Longest Sc~>Sk path length (instruction count) by exhaustive recursion.
/// Only for small circuits.
inline std::size_t enumerate_longest_path_length(const Circuit& circuit) {
    const CircuitGraph g = build_circuit_graph(circuit);
    std::vector<long> memo(g.num_vertices(), -1);
    // Longest instruction count from v to the sink, v excluded.
    auto walk = [&](auto&& self, std::size_t v) -> long {
        if (memo[v] >= 0) return memo[v];
        long best = 0;
        for (std::size_t w : g.succ[v]) {
            long tail = self(self, w);
            if (w != g.sink()) tail += 1;
            best = std::max(best, tail);
        }
        return memo[v] = best;
    };
    return static_cast<std::size_t>(walk(walk, g.source()));
}

struct McEbitEstimate {
    double mean_us = 0.0;
    double stderr_us = 0.0;
};

/// Direct simulation of the heralded generation process: attempts fail
/// with probability 1 - p_e and cost T_f; the final success costs T_s.
inline McEbitEstimate mc_expected_ebit_time(const EbitLinkParams& params, std::size_t trials,
                                            std::uint64_t seed) {
    const double p_e = end_to_end_success_probability(params);
    const AttemptTimes t = attempt_times(params);
    std::mt19937_64 rng(seed);
    std::geometric_distribution<long long> failures(p_e);

    double sum = 0.0, sum_sq = 0.0;
    for (std::size_t i = 0; i < trials; ++i) {
        const double time = static_cast<double>(failures(rng)) * t.failure_us + t.success_us;
        sum += time;
        sum_sq += time * time;
    }
    McEbitEstimate est;
    est.mean_us = sum / static_cast<double>(trials);
    const double variance =
        (sum_sq - sum * sum / static_cast<double>(trials)) / static_cast<double>(trials - 1);
    est.stderr_us = std::sqrt(variance / static_cast<double>(trials));
    return est;
}

}  // namespace qsta::testing
