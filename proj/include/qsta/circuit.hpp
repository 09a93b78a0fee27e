#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qsta {

using ns_t = std::int64_t;

enum class Opcode {
    H,
    X,
    Y,
    Z,
    I,
    P,       // phase rotation; 1 qubit, or 2 qubits (controlled form)
    CX,
    Measure,
    Reset,
    EbitH,   // first half of an ebit generation on a communication pair
    EbitCX,  // second half; carries the ebit generation time
    Macro,   // opaque block occupying all listed qubits for its duration
};

const char* opcode_name(Opcode op);

enum class QubitRole { Data, Work, Comm, Ancilla };
enum class Partition { None, QpuA, QpuB };

/// One gate-level instruction. Operand counts are fixed per opcode; see
/// Circuit::append for the validation rules.
struct Instruction {
    Opcode opcode;
    std::vector<std::size_t> qubits;
    std::vector<std::size_t> clbits;     // measurement targets
    std::vector<std::size_t> condition;  // classical control bits (sorted, unique)
    double angle = 0.0;                  // P only, radians
    std::string label;                   // Macro only
    std::optional<ns_t> duration_override;
    std::string tag;  // block annotation, e.g. "cu:3", "g:1"; empty if none

    bool conditioned() const { return !condition.empty(); }
    bool is_two_qubit() const { return qubits.size() == 2; }
};

Instruction make_h(std::size_t q);
Instruction make_x(std::size_t q);
Instruction make_y(std::size_t q);
Instruction make_z(std::size_t q);
Instruction make_i(std::size_t q);
Instruction make_p(double angle, std::size_t q);
Instruction make_cp(double angle, std::size_t ctrl, std::size_t target);
Instruction make_cx(std::size_t ctrl, std::size_t target);
Instruction make_measure(std::size_t q, std::size_t c);
Instruction make_reset(std::size_t q);
Instruction make_ebit_h(std::size_t q);
Instruction make_ebit_cx(std::size_t a, std::size_t b);
Instruction make_macro(std::string label, std::vector<std::size_t> qubits,
                       std::optional<ns_t> duration = std::nullopt);

/// Gate-level circuit. Instructions are append-only, so the list order is
/// always a valid topological order of the induced dependency DAG: every
/// predecessor of an instruction on any shared bit occurs earlier.
class Circuit {
public:
    Circuit() = default;
    Circuit(std::string name, std::size_t num_qubits, std::size_t num_clbits);

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }
    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t num_clbits() const { return num_clbits_; }
    const std::vector<Instruction>& instructions() const { return instructions_; }
    std::size_t size() const { return instructions_.size(); }
    bool empty() const { return instructions_.empty(); }

    QubitRole role(std::size_t q) const;
    Partition partition(std::size_t q) const;
    void set_role(std::size_t q, QubitRole role);
    void set_partition(std::size_t q, Partition p);
    bool partitioned() const { return partitioned_; }

    /// Qubits with a given role, in index order.
    std::vector<std::size_t> qubits_with_role(QubitRole role) const;

    /// Validates operand arity, index bounds, operand distinctness and the
    /// cross-QPU locality rule, then appends.
    void append(Instruction instr);

private:
    void validate(const Instruction& instr) const;

    std::string name_ = "circuit";
    std::size_t num_qubits_ = 0;
    std::size_t num_clbits_ = 0;
    std::vector<Instruction> instructions_;
    std::vector<QubitRole> roles_;
    std::vector<Partition> partitions_;
    bool partitioned_ = false;
};

/// Creates a circuit and applies role/partition maps (index -> value).
Circuit new_circuit(std::size_t num_qubits, std::size_t num_clbits,
                    const std::vector<std::pair<std::size_t, QubitRole>>& roles = {},
                    const std::vector<std::pair<std::size_t, Partition>>& partition = {});

}  // namespace qsta
