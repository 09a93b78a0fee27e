#include "qsta/circuit.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qsta {

const char* opcode_name(Opcode op) {
    switch (op) {
        case Opcode::H: return "h";
        case Opcode::X: return "x";
        case Opcode::Y: return "y";
        case Opcode::Z: return "z";
        case Opcode::I: return "i";
        case Opcode::P: return "p";
        case Opcode::CX: return "cx";
        case Opcode::Measure: return "measure";
        case Opcode::Reset: return "reset";
        case Opcode::EbitH: return "ebit_h";
        case Opcode::EbitCX: return "ebit_cx";
        case Opcode::Macro: return "macro";
    }
    return "?";
}

namespace {

Instruction one_qubit(Opcode op, std::size_t q) {
    Instruction in;
    in.opcode = op;
    in.qubits = {q};
    return in;
}

}  // namespace

Instruction make_h(std::size_t q) { return one_qubit(Opcode::H, q); }
Instruction make_x(std::size_t q) { return one_qubit(Opcode::X, q); }
Instruction make_y(std::size_t q) { return one_qubit(Opcode::Y, q); }
Instruction make_z(std::size_t q) { return one_qubit(Opcode::Z, q); }
Instruction make_i(std::size_t q) { return one_qubit(Opcode::I, q); }
Instruction make_reset(std::size_t q) { return one_qubit(Opcode::Reset, q); }
Instruction make_ebit_h(std::size_t q) { return one_qubit(Opcode::EbitH, q); }

Instruction make_p(double angle, std::size_t q) {
    Instruction in = one_qubit(Opcode::P, q);
    in.angle = angle;
    return in;
}

Instruction make_cp(double angle, std::size_t ctrl, std::size_t target) {
    Instruction in;
    in.opcode = Opcode::P;
    in.qubits = {ctrl, target};
    in.angle = angle;
    return in;
}

Instruction make_cx(std::size_t ctrl, std::size_t target) {
    Instruction in;
    in.opcode = Opcode::CX;
    in.qubits = {ctrl, target};
    return in;
}

Instruction make_ebit_cx(std::size_t a, std::size_t b) {
    Instruction in;
    in.opcode = Opcode::EbitCX;
    in.qubits = {a, b};
    return in;
}

Instruction make_measure(std::size_t q, std::size_t c) {
    Instruction in;
    in.opcode = Opcode::Measure;
    in.qubits = {q};
    in.clbits = {c};
    return in;
}

Instruction make_macro(std::string label, std::vector<std::size_t> qubits,
                       std::optional<ns_t> duration) {
    Instruction in;
    in.opcode = Opcode::Macro;
    in.label = std::move(label);
    in.qubits = std::move(qubits);
    in.duration_override = duration;
    return in;
}

Circuit::Circuit(std::string name, std::size_t num_qubits, std::size_t num_clbits)
    : name_(std::move(name)),
      num_qubits_(num_qubits),
      num_clbits_(num_clbits),
      roles_(num_qubits, QubitRole::Ancilla),
      partitions_(num_qubits, Partition::None) {}

QubitRole Circuit::role(std::size_t q) const {
    if (q >= num_qubits_) throw std::out_of_range("qubit index out of range");
    return roles_[q];
}

Partition Circuit::partition(std::size_t q) const {
    if (q >= num_qubits_) throw std::out_of_range("qubit index out of range");
    return partitions_[q];
}

void Circuit::set_role(std::size_t q, QubitRole role) {
    if (q >= num_qubits_) throw std::out_of_range("role map references invalid qubit");
    roles_[q] = role;
}

void Circuit::set_partition(std::size_t q, Partition p) {
    if (q >= num_qubits_) throw std::out_of_range("partition map references invalid qubit");
    partitions_[q] = p;
    if (p != Partition::None) partitioned_ = true;
}

std::vector<std::size_t> Circuit::qubits_with_role(QubitRole role) const {
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < num_qubits_; ++q)
        if (roles_[q] == role) out.push_back(q);
    return out;
}

void Circuit::validate(const Instruction& instr) const {
    const auto arity = instr.qubits.size();
    switch (instr.opcode) {
        case Opcode::H:
        case Opcode::X:
        case Opcode::Y:
        case Opcode::Z:
        case Opcode::I:
        case Opcode::Reset:
        case Opcode::EbitH:
            if (arity != 1)
                throw std::invalid_argument(std::string(opcode_name(instr.opcode)) +
                                            " takes exactly 1 qubit");
            break;
        case Opcode::P:
            // 1-qubit rotation, or the controlled (2-qubit) form used by the
            // quantum-mode phase corrections.
            if (arity != 1 && arity != 2)
                throw std::invalid_argument("p takes 1 or 2 qubits");
            break;
        case Opcode::CX:
        case Opcode::EbitCX:
            if (arity != 2)
                throw std::invalid_argument(std::string(opcode_name(instr.opcode)) +
                                            " takes exactly 2 qubits");
            break;
        case Opcode::Measure:
            if (arity != 1 || instr.clbits.size() != 1)
                throw std::invalid_argument("measure takes exactly 1 qubit and 1 clbit");
            break;
        case Opcode::Macro:
            if (arity < 1) throw std::invalid_argument("macro needs at least 1 qubit");
            if (instr.label.empty()) throw std::invalid_argument("macro needs a label");
            break;
    }
    if (instr.opcode != Opcode::Measure && !instr.clbits.empty())
        throw std::invalid_argument("only measure writes clbits");

    for (std::size_t q : instr.qubits)
        if (q >= num_qubits_)
            throw std::out_of_range("qubit index " + std::to_string(q) + " out of range");
    for (std::size_t c : instr.clbits)
        if (c >= num_clbits_)
            throw std::out_of_range("clbit index " + std::to_string(c) + " out of range");
    for (std::size_t c : instr.condition)
        if (c >= num_clbits_)
            throw std::out_of_range("condition bit " + std::to_string(c) + " out of range");

    auto sorted = instr.qubits;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("qubit operands must be pairwise distinct");

    if (instr.duration_override && *instr.duration_override < 0)
        throw std::invalid_argument("duration override must be non-negative");

    if (partitioned_ && instr.qubits.size() >= 2) {
        Partition first = partitions_[instr.qubits[0]];
        bool crosses = false;
        for (std::size_t q : instr.qubits) {
            Partition p = partitions_[q];
            if (p != Partition::None && first == Partition::None) first = p;
            if (p != Partition::None && p != first) crosses = true;
        }
        if (crosses) {
            const bool comm_pair = instr.opcode == Opcode::EbitCX &&
                                   roles_[instr.qubits[0]] == QubitRole::Comm &&
                                   roles_[instr.qubits[1]] == QubitRole::Comm;
            if (!comm_pair)
                throw std::invalid_argument(
                    "cross-QPU operation: only ebit_cx on a communication pair may span QPUs");
        }
    }
}

void Circuit::append(Instruction instr) {
    validate(instr);
    std::sort(instr.condition.begin(), instr.condition.end());
    instr.condition.erase(std::unique(instr.condition.begin(), instr.condition.end()),
                          instr.condition.end());
    instructions_.push_back(std::move(instr));
}

Circuit new_circuit(std::size_t num_qubits, std::size_t num_clbits,
                    const std::vector<std::pair<std::size_t, QubitRole>>& roles,
                    const std::vector<std::pair<std::size_t, Partition>>& partition) {
    Circuit c("circuit", num_qubits, num_clbits);
    for (const auto& [q, role] : roles) c.set_role(q, role);
    for (const auto& [q, p] : partition) c.set_partition(q, p);
    return c;
}

}  // namespace qsta
