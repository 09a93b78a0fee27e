#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qsta/circuit.hpp"
#include "qsta/profile.hpp"

namespace qsta {

enum class DesignKind { Regular, RegularSemiclassical, Iterative, Alternating };

const char* design_name(DesignKind kind);
DesignKind design_from_name(const std::string& name);

enum class PhaseMode { Quantum, Classical };

/// Source of the controlled-unitary block contents. Abstract blocks become
/// opaque macros spanning the control plus the whole work register;
/// explicit blocks are gate-level subcircuits over qubit 0 (the control)
/// and qubits 1..n (the work register), inlined at build time.
class CUProvider {
public:
    static CUProvider abstract_delays(std::vector<ns_t> delays);
    static CUProvider abstract_fn(std::function<ns_t(std::size_t, std::size_t)> fn);
    static CUProvider explicit_circuits(std::vector<Circuit> subcircuits);
    /// Parses each file with the circuit text format.
    static CUProvider imported(const std::vector<std::string>& paths);

    bool is_abstract() const { return std::holds_alternative<Abstract>(content_); }
    /// Abstract only; list variants must cover index i.
    ns_t abstract_delay(std::size_t i, std::size_t n) const;
    /// Explicit only.
    const Circuit& subcircuit(std::size_t i) const;
    /// Number of provided items; 0 means "any m" (delay function).
    std::size_t fixed_count() const;

private:
    struct Abstract {
        std::vector<ns_t> delays;  // empty when fn is set
        std::function<ns_t(std::size_t, std::size_t)> fn;
    };
    struct Explicit {
        std::vector<Circuit> subcircuits;
    };
    std::variant<Abstract, Explicit> content_;
};

struct ShorDesignSpec {
    std::size_t n = 1;           // work register width
    std::size_t m = 2;           // data register width, conventionally 2n
    DesignKind design = DesignKind::Iterative;
    CUProvider cu = CUProvider::abstract_fn([](std::size_t, std::size_t) { return ns_t{0}; });
    bool include_final_reset = true;
};

ShorDesignSpec make_design_spec(DesignKind design, std::size_t n, CUProvider cu,
                                std::optional<std::size_t> m = std::nullopt,
                                bool include_final_reset = true);

struct EbitChannel {
    std::size_t qubit_a = 0;  // communication qubit on QPU A
    std::size_t qubit_b = 0;  // communication qubit on QPU B
    ns_t t_ebit = -1;         // per-channel override; <0 defers to the profile
};

struct DistInfo {
    std::size_t k = 0;
    std::vector<EbitChannel> channels;
    bool channel_resets = true;
};

/// A built design: the circuit plus what the delay decomposition needs to
/// interpret its block annotations.
struct ShorCircuit {
    Circuit circuit;
    DesignKind kind = DesignKind::Iterative;
    std::size_t n = 0;
    std::size_t m = 0;
    PhaseMode phase_mode = PhaseMode::Classical;
    bool include_final_reset = true;
    std::optional<DistInfo> dist;
};

/// Phase correction P_j of the inverse QFT: j rotations by -2*pi/2^(k+1),
/// k = 1..j, on data qubit j, each governed by (qu)bit j-k. Quantum mode
/// emits two-qubit controlled rotations, classical mode clbit-conditioned
/// single-qubit rotations.
std::vector<Instruction> phase_correction(std::size_t j, PhaseMode mode);

ShorCircuit build_regular(const ShorDesignSpec& spec);
ShorCircuit build_regular_semiclassical(const ShorDesignSpec& spec);
ShorCircuit build_iterative(const ShorDesignSpec& spec);
ShorCircuit build_alternating(const ShorDesignSpec& spec);
ShorCircuit build_design(const ShorDesignSpec& spec);

/// Per-index CU block delays under a profile: abstract delays directly,
/// explicit subcircuits by their own circuit delay.
std::vector<ns_t> resolve_cu_delays(const ShorDesignSpec& spec, const DelayProfile& profile);

/// Serial delay of the phase-processing block P_i H M R H.
ns_t phase_block_delay(const DelayProfile& profile, PhaseMode mode, std::size_t i);

struct ZeroIdleCheck {
    bool ok = true;
    std::vector<ns_t> margins;  // one per tested index; negative = violated
};

/// Work-register zero-idle condition of the alternating design:
/// t_CU^(i+1) >= t(P_i H M R H) for all i in 0..m-2.
ZeroIdleCheck check_alternating_zero_idle(const ShorDesignSpec& spec,
                                          const DelayProfile& profile);

}  // namespace qsta
