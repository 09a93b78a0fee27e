#include "qsta/shor_designs.hpp"

#include <cmath>
#include <stdexcept>

#include "qsta/distribution.hpp"
#include "qsta/text_format.hpp"
#include "qsta/timing.hpp"

namespace qsta {

const char* design_name(DesignKind kind) {
    switch (kind) {
        case DesignKind::Regular: return "regular";
        case DesignKind::RegularSemiclassical: return "regular_semiclassical";
        case DesignKind::Iterative: return "iterative";
        case DesignKind::Alternating: return "alternating";
    }
    return "?";
}

DesignKind design_from_name(const std::string& name) {
    if (name == "regular") return DesignKind::Regular;
    if (name == "regular_semiclassical") return DesignKind::RegularSemiclassical;
    if (name == "iterative") return DesignKind::Iterative;
    if (name == "alternating") return DesignKind::Alternating;
    throw std::invalid_argument("unknown design '" + name + "'");
}

CUProvider CUProvider::abstract_delays(std::vector<ns_t> delays) {
    for (ns_t d : delays)
        if (d < 0) throw std::invalid_argument("abstract CU delays must be non-negative");
    CUProvider p;
    p.content_ = Abstract{std::move(delays), {}};
    return p;
}

CUProvider CUProvider::abstract_fn(std::function<ns_t(std::size_t, std::size_t)> fn) {
    CUProvider p;
    p.content_ = Abstract{{}, std::move(fn)};
    return p;
}

namespace {

// The control (qubit 0 of a subcircuit) may participate only as the
// control operand of controlled operations; anything else breaks the
// one-ebit-per-CU embedding when distributed.
void validate_cu_subcircuit(const Circuit& sub, std::size_t index) {
    const auto where = " in CU subcircuit " + std::to_string(index);
    if (sub.num_qubits() < 1) throw std::invalid_argument("empty register" + where);
    if (sub.num_clbits() != 0)
        throw std::invalid_argument("classical bits not allowed" + where);
    for (const Instruction& instr : sub.instructions()) {
        switch (instr.opcode) {
            case Opcode::Measure:
            case Opcode::Reset:
            case Opcode::EbitH:
            case Opcode::EbitCX:
            case Opcode::Macro:
                throw std::invalid_argument(std::string("opcode '") +
                                            opcode_name(instr.opcode) + "' not allowed" + where);
            default:
                break;
        }
        for (std::size_t pos = 0; pos < instr.qubits.size(); ++pos) {
            if (instr.qubits[pos] != 0) continue;
            const bool controlled_op =
                (instr.opcode == Opcode::CX || (instr.opcode == Opcode::P && instr.is_two_qubit()));
            if (!controlled_op || pos != 0)
                throw std::invalid_argument("control qubit used as target" + where +
                                            " (embedding violated)");
        }
    }
}

}  // namespace

CUProvider CUProvider::explicit_circuits(std::vector<Circuit> subcircuits) {
    for (std::size_t i = 0; i < subcircuits.size(); ++i)
        validate_cu_subcircuit(subcircuits[i], i);
    CUProvider p;
    p.content_ = Explicit{std::move(subcircuits)};
    return p;
}

CUProvider CUProvider::imported(const std::vector<std::string>& paths) {
    std::vector<Circuit> subs;
    subs.reserve(paths.size());
    for (const std::string& path : paths) subs.push_back(load_circuit_file(path));
    return explicit_circuits(std::move(subs));
}

ns_t CUProvider::abstract_delay(std::size_t i, std::size_t n) const {
    const auto& a = std::get<Abstract>(content_);
    if (a.fn) {
        ns_t d = a.fn(i, n);
        if (d < 0) throw std::invalid_argument("abstract CU delay function returned < 0");
        return d;
    }
    if (i >= a.delays.size())
        throw std::invalid_argument("CU provider covers " + std::to_string(a.delays.size()) +
                                    " blocks, index " + std::to_string(i) + " requested");
    return a.delays[i];
}

const Circuit& CUProvider::subcircuit(std::size_t i) const {
    const auto& e = std::get<Explicit>(content_);
    if (i >= e.subcircuits.size())
        throw std::invalid_argument("CU provider covers " + std::to_string(e.subcircuits.size()) +
                                    " blocks, index " + std::to_string(i) + " requested");
    return e.subcircuits[i];
}

std::size_t CUProvider::fixed_count() const {
    if (is_abstract()) {
        const auto& a = std::get<Abstract>(content_);
        return a.fn ? 0 : a.delays.size();
    }
    return std::get<Explicit>(content_).subcircuits.size();
}

ShorDesignSpec make_design_spec(DesignKind design, std::size_t n, CUProvider cu,
                                std::optional<std::size_t> m, bool include_final_reset) {
    if (n < 1) throw std::invalid_argument("work register needs n >= 1");
    ShorDesignSpec spec;
    spec.n = n;
    spec.m = m.value_or(2 * n);
    if (spec.m < 1) throw std::invalid_argument("data register needs m >= 1");
    spec.design = design;
    spec.cu = std::move(cu);
    spec.include_final_reset = include_final_reset;
    return spec;
}

std::vector<Instruction> phase_correction(std::size_t j, PhaseMode mode) {
    std::vector<Instruction> out;
    out.reserve(j);
    for (std::size_t k = 1; k <= j; ++k) {
        const double angle = -2.0 * M_PI / std::exp2(static_cast<double>(k + 1));
        if (mode == PhaseMode::Quantum) {
            out.push_back(make_cp(angle, /*ctrl=*/j - k, /*target=*/j));
        } else {
            Instruction p = make_p(angle, j);
            p.condition = {j - k};
            out.push_back(std::move(p));
        }
    }
    return out;
}

namespace {

struct Builder {
    const ShorDesignSpec& spec;
    Circuit circuit;
    std::vector<std::size_t> work;  // work register qubit indices
    const DistributedLayout* layout = nullptr;
    std::vector<EbitChannel> channels;
    std::vector<std::size_t> channel_assignment;
    std::vector<std::size_t> channel_uses;

    Builder(const ShorDesignSpec& spec, std::size_t data_qubits, const std::string& name,
            const DistributedLayout* layout)
        : spec(spec),
          circuit(name, data_qubits + spec.n + (layout ? 2 * layout->k : 0),
                  layout ? 3 * spec.m : spec.m),
          layout(layout) {
        if (std::size_t count = spec.cu.fixed_count(); count != 0 && count != spec.m)
            throw std::invalid_argument("CU provider supplies " + std::to_string(count) +
                                        " blocks, design needs " + std::to_string(spec.m));
        for (std::size_t q = 0; q < data_qubits; ++q) circuit.set_role(q, QubitRole::Data);
        for (std::size_t q = data_qubits; q < data_qubits + spec.n; ++q) {
            circuit.set_role(q, QubitRole::Work);
            work.push_back(q);
        }
        if (layout) {
            if (layout->k < 1) throw std::invalid_argument("layout needs k >= 1");
            for (std::size_t q = 0; q < data_qubits; ++q)
                circuit.set_partition(q, Partition::QpuA);
            for (std::size_t q : work) circuit.set_partition(q, Partition::QpuB);
            const std::size_t base = data_qubits + spec.n;
            for (std::size_t ch = 0; ch < layout->k; ++ch) {
                EbitChannel chan{base + 2 * ch, base + 2 * ch + 1, layout->t_ebit};
                circuit.set_role(chan.qubit_a, QubitRole::Comm);
                circuit.set_role(chan.qubit_b, QubitRole::Comm);
                circuit.set_partition(chan.qubit_a, Partition::QpuA);
                circuit.set_partition(chan.qubit_b, Partition::QpuB);
                channels.push_back(chan);
            }
            channel_assignment = assign_channels(spec.m, layout->k);
            channel_uses.assign(layout->k, 0);
        }
        if (!spec.cu.is_abstract())
            for (std::size_t i = 0; i < spec.m; ++i)
                if (spec.cu.subcircuit(i).num_qubits() != spec.n + 1)
                    throw std::invalid_argument("CU subcircuit " + std::to_string(i) + " acts on " +
                                                std::to_string(spec.cu.subcircuit(i).num_qubits()) +
                                                " qubits, design needs " +
                                                std::to_string(spec.n + 1));
    }

    void tagged(Instruction instr, const std::string& tag) {
        instr.tag = tag;
        circuit.append(std::move(instr));
    }

    // Local CU^{2^i} content controlled by `ctrl`: one macro for abstract
    // content, the inlined subcircuit otherwise.
    void cu_content(std::size_t i, std::size_t ctrl) {
        const std::string tag = "cu:" + std::to_string(i);
        if (spec.cu.is_abstract()) {
            std::vector<std::size_t> span{ctrl};
            span.insert(span.end(), work.begin(), work.end());
            tagged(make_macro("CU_" + std::to_string(i), std::move(span),
                              spec.cu.abstract_delay(i, spec.n)),
                   tag);
            return;
        }
        for (Instruction instr : spec.cu.subcircuit(i).instructions()) {
            for (std::size_t& q : instr.qubits) q = (q == 0) ? ctrl : work[q - 1];
            tagged(std::move(instr), tag);
        }
    }

    std::size_t s_clbit(std::size_t i) const { return spec.m + 2 * i; }
    std::size_t e_clbit(std::size_t i) const { return spec.m + 2 * i + 1; }

    // CU^{2^i} controlled by data qubit `ctrl`; monolithically this is the
    // content itself, distributed it is the EJPP-wrapped remote execution
    // G, S, CU, E on the round-robin channel.
    void cu_block(std::size_t i, std::size_t ctrl) {
        if (!layout) {
            cu_content(i, ctrl);
            return;
        }
        const std::string suffix = ":" + std::to_string(i);
        const EbitChannel& chan = channels[channel_assignment[i]];

        // G: regenerate an ebit on the channel, resetting both halves when
        // the channel is reused.
        if (channel_uses[channel_assignment[i]]++ > 0 && layout->channel_resets) {
            tagged(make_reset(chan.qubit_a), "g" + suffix);
            tagged(make_reset(chan.qubit_b), "g" + suffix);
        }
        tagged(make_ebit_h(chan.qubit_a), "g" + suffix);
        Instruction gen = make_ebit_cx(chan.qubit_a, chan.qubit_b);
        if (chan.t_ebit >= 0) gen.duration_override = chan.t_ebit;
        tagged(std::move(gen), "g" + suffix);

        // S: mirror the control onto the remote half (cat-entangler).
        tagged(make_cx(ctrl, chan.qubit_a), "s" + suffix);
        tagged(make_measure(chan.qubit_a, s_clbit(i)), "s" + suffix);
        Instruction fix_x = make_x(chan.qubit_b);
        fix_x.condition = {s_clbit(i)};
        tagged(std::move(fix_x), "s" + suffix);

        // The CU runs locally on QPU B, controlled by the ebit half.
        cu_content(i, chan.qubit_b);

        // E: decouple the control (cat-disentangler).
        tagged(make_h(chan.qubit_b), "e" + suffix);
        tagged(make_measure(chan.qubit_b, e_clbit(i)), "e" + suffix);
        Instruction fix_z = make_z(ctrl);
        fix_z.condition = {e_clbit(i)};
        tagged(std::move(fix_z), "e" + suffix);
    }

    // Classical-mode rotations of P_i, retargeted to the hosting qubit.
    void phase_rotations(std::size_t i, std::size_t target, const std::string& tag) {
        for (Instruction rot : phase_correction(i, PhaseMode::Classical)) {
            rot.qubits = {target};
            tagged(std::move(rot), tag);
        }
    }

    // Phase-processing block of index i on `target`: P_i, H, measure into
    // clbit i, then reset and re-initialization when requested.
    void phase_block(std::size_t i, std::size_t target, bool with_reset, bool with_reinit) {
        const std::string tag = "phase:" + std::to_string(i);
        phase_rotations(i, target, tag);
        tagged(make_h(target), tag);
        tagged(make_measure(target, i), tag);
        if (with_reset) tagged(make_reset(target), tag);
        if (with_reinit) tagged(make_h(target), tag);
    }

    bool final_reset(std::size_t i) const {
        return i + 1 < spec.m || spec.include_final_reset;
    }

    ShorCircuit finish(DesignKind kind, PhaseMode mode) && {
        ShorCircuit sc;
        sc.circuit = std::move(circuit);
        sc.kind = kind;
        sc.n = spec.n;
        sc.m = spec.m;
        sc.phase_mode = mode;
        sc.include_final_reset = spec.include_final_reset;
        if (layout) sc.dist = DistInfo{layout->k, std::move(channels), layout->channel_resets};
        return sc;
    }
};

ShorCircuit build_regular_impl(const ShorDesignSpec& spec, const DistributedLayout* layout) {
    Builder b(spec, spec.m, "shor_regular", layout);
    for (std::size_t j = 0; j < spec.m; ++j)
        b.tagged(make_h(j), j == 0 ? "init" : "");
    for (std::size_t i = 0; i < spec.m; ++i) b.cu_block(i, i);
    for (std::size_t i = 0; i < spec.m; ++i) {
        const std::string tag = "phase:" + std::to_string(i);
        for (Instruction rot : phase_correction(i, PhaseMode::Quantum)) b.tagged(std::move(rot), tag);
        b.tagged(make_h(i), tag);
    }
    for (std::size_t i = 0; i < spec.m; ++i)
        b.tagged(make_measure(i, i), "phase:" + std::to_string(i));
    return std::move(b).finish(DesignKind::Regular, PhaseMode::Quantum);
}

ShorCircuit build_regular_semiclassical_impl(const ShorDesignSpec& spec,
                                             const DistributedLayout* layout) {
    Builder b(spec, spec.m, "shor_regular_semiclassical", layout);
    for (std::size_t j = 0; j < spec.m; ++j)
        b.tagged(make_h(j), j == 0 ? "init" : "");
    for (std::size_t i = 0; i < spec.m; ++i) {
        b.cu_block(i, i);
        b.phase_block(i, i, b.final_reset(i), /*with_reinit=*/true);
    }
    return std::move(b).finish(DesignKind::RegularSemiclassical, PhaseMode::Classical);
}

ShorCircuit build_iterative_impl(const ShorDesignSpec& spec, const DistributedLayout* layout) {
    Builder b(spec, 1, "shor_iterative", layout);
    const std::size_t d = 0;
    for (std::size_t i = 0; i < spec.m; ++i) {
        // The leading Hadamard re-initializes the qubit; from iteration 1
        // on it belongs to the previous phase-processing block.
        b.tagged(make_h(d), i == 0 ? "init" : "phase:" + std::to_string(i - 1));
        b.cu_block(i, d);
        b.phase_block(i, d, b.final_reset(i), /*with_reinit=*/false);
    }
    return std::move(b).finish(DesignKind::Iterative, PhaseMode::Classical);
}

ShorCircuit build_alternating_impl(const ShorDesignSpec& spec, const DistributedLayout* layout) {
    Builder b(spec, 2, "shor_alternating", layout);
    b.tagged(make_h(0), "init");
    b.tagged(make_h(1), "");
    for (std::size_t i = 0; i < spec.m; ++i) {
        const std::size_t d = i % 2;
        b.cu_block(i, d);
        b.phase_block(i, d, b.final_reset(i), /*with_reinit=*/true);
    }
    return std::move(b).finish(DesignKind::Alternating, PhaseMode::Classical);
}

ShorCircuit build_impl(const ShorDesignSpec& spec, const DistributedLayout* layout) {
    switch (spec.design) {
        case DesignKind::Regular: return build_regular_impl(spec, layout);
        case DesignKind::RegularSemiclassical:
            return build_regular_semiclassical_impl(spec, layout);
        case DesignKind::Iterative: return build_iterative_impl(spec, layout);
        case DesignKind::Alternating: return build_alternating_impl(spec, layout);
    }
    throw std::invalid_argument("unknown design kind");
}

}  // namespace

ShorCircuit build_regular(const ShorDesignSpec& spec) {
    return build_regular_impl(spec, nullptr);
}

ShorCircuit build_regular_semiclassical(const ShorDesignSpec& spec) {
    return build_regular_semiclassical_impl(spec, nullptr);
}

ShorCircuit build_iterative(const ShorDesignSpec& spec) {
    return build_iterative_impl(spec, nullptr);
}

ShorCircuit build_alternating(const ShorDesignSpec& spec) {
    return build_alternating_impl(spec, nullptr);
}

ShorCircuit build_design(const ShorDesignSpec& spec) { return build_impl(spec, nullptr); }

ShorCircuit distribute(const ShorDesignSpec& spec, const DistributedLayout& layout) {
    return build_impl(spec, &layout);
}

std::vector<ns_t> resolve_cu_delays(const ShorDesignSpec& spec, const DelayProfile& profile) {
    std::vector<ns_t> delays(spec.m);
    for (std::size_t i = 0; i < spec.m; ++i)
        delays[i] = spec.cu.is_abstract() ? spec.cu.abstract_delay(i, spec.n)
                                          : circuit_delay(spec.cu.subcircuit(i), profile);
    return delays;
}

ns_t phase_block_delay(const DelayProfile& profile, PhaseMode mode, std::size_t i) {
    Instruction rot;
    if (mode == PhaseMode::Quantum) {
        rot = make_cp(0.0, 0, 1);
    } else {
        rot = make_p(0.0, 0);
        rot.condition = {0};
    }
    return static_cast<ns_t>(i) * delay_of(rot, profile) + 2 * delay_of(make_h(0), profile) +
           delay_of(make_measure(0, 0), profile) + delay_of(make_reset(0), profile);
}

ZeroIdleCheck check_alternating_zero_idle(const ShorDesignSpec& spec,
                                          const DelayProfile& profile) {
    const std::vector<ns_t> cu = resolve_cu_delays(spec, profile);
    ZeroIdleCheck check;
    for (std::size_t i = 0; i + 1 < spec.m; ++i) {
        const ns_t margin = cu[i + 1] - phase_block_delay(profile, PhaseMode::Classical, i);
        check.margins.push_back(margin);
        if (margin < 0) check.ok = false;
    }
    return check;
}

}  // namespace qsta
