#pragma once

#include <string>

#include "qsta/circuit.hpp"

namespace qsta {

/// Line-oriented circuit exchange format (UTF-8, '#' comments):
///
///   qubits <n>
///   clbits <n>
///   role <q> <DATA|WORK|COMM|ANCILLA>
///   qpu <q> <A|B>
///   <opcode> <qubit indices...> [-> <clbit>] [if <clbit list>] [dur=<ns>] [tag=<label>]
///
/// Opcodes: h x y z i p(<radians>) cx measure reset ebit_h ebit_cx
/// macro <label>. serialize(parse(text)) normalizes whitespace only.
Circuit parse_circuit(const std::string& text);
std::string serialize_circuit(const Circuit& circuit);

Circuit load_circuit_file(const std::string& path);
void save_circuit_file(const Circuit& circuit, const std::string& path);

}  // namespace qsta
