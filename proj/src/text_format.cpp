#include "qsta/text_format.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qsta {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '#') break;
        tokens.push_back(tok);
    }
    return tokens;
}

bool parse_index(const std::string& tok, std::size_t& out) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size() || v < 0) return false;
        out = static_cast<std::size_t>(v);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

std::string format_angle(double angle) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", angle);
    return buf;
}

}  // namespace

Circuit parse_circuit(const std::string& text) {
    std::istringstream stream(text);
    std::string line;
    std::size_t line_no = 0;

    std::size_t num_qubits = 0, num_clbits = 0;
    bool sized = false;
    Circuit circuit;
    std::vector<std::pair<std::size_t, QubitRole>> roles;
    std::vector<std::pair<std::size_t, Partition>> partitions;

    auto ensure_sized = [&](std::size_t at_line) {
        if (!sized) {
            circuit = Circuit("circuit", num_qubits, num_clbits);
            for (const auto& [q, r] : roles) circuit.set_role(q, r);
            for (const auto& [q, p] : partitions) circuit.set_partition(q, p);
            sized = true;
        }
        (void)at_line;
    };

    while (std::getline(stream, line)) {
        ++line_no;
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        const std::string& head = tokens[0];

        if (head == "qubits" || head == "clbits") {
            if (sized) fail(line_no, "register size after first instruction");
            std::size_t n;
            if (tokens.size() != 2 || !parse_index(tokens[1], n))
                fail(line_no, "expected '" + head + " <count>'");
            (head == "qubits" ? num_qubits : num_clbits) = n;
            continue;
        }
        if (head == "role") {
            std::size_t q;
            if (tokens.size() != 3 || !parse_index(tokens[1], q))
                fail(line_no, "expected 'role <qubit> <DATA|WORK|COMM|ANCILLA>'");
            QubitRole r;
            if (tokens[2] == "DATA") r = QubitRole::Data;
            else if (tokens[2] == "WORK") r = QubitRole::Work;
            else if (tokens[2] == "COMM") r = QubitRole::Comm;
            else if (tokens[2] == "ANCILLA") r = QubitRole::Ancilla;
            else fail(line_no, "unknown role '" + tokens[2] + "'");
            if (sized) circuit.set_role(q, r); else roles.emplace_back(q, r);
            continue;
        }
        if (head == "qpu") {
            std::size_t q;
            if (tokens.size() != 3 || !parse_index(tokens[1], q))
                fail(line_no, "expected 'qpu <qubit> <A|B>'");
            Partition p;
            if (tokens[2] == "A") p = Partition::QpuA;
            else if (tokens[2] == "B") p = Partition::QpuB;
            else fail(line_no, "unknown QPU '" + tokens[2] + "'");
            if (sized) circuit.set_partition(q, p); else partitions.emplace_back(q, p);
            continue;
        }

        // Instruction line.
        Instruction instr;
        std::size_t pos = 1;
        if (head == "h") instr.opcode = Opcode::H;
        else if (head == "x") instr.opcode = Opcode::X;
        else if (head == "y") instr.opcode = Opcode::Y;
        else if (head == "z") instr.opcode = Opcode::Z;
        else if (head == "i") instr.opcode = Opcode::I;
        else if (head == "cx") instr.opcode = Opcode::CX;
        else if (head == "measure") instr.opcode = Opcode::Measure;
        else if (head == "reset") instr.opcode = Opcode::Reset;
        else if (head == "ebit_h") instr.opcode = Opcode::EbitH;
        else if (head == "ebit_cx") instr.opcode = Opcode::EbitCX;
        else if (head.size() > 2 && head.rfind("p(", 0) == 0 && head.back() == ')') {
            instr.opcode = Opcode::P;
            const std::string body = head.substr(2, head.size() - 3);
            try {
                std::size_t used = 0;
                instr.angle = std::stod(body, &used);
                if (used != body.size()) throw std::invalid_argument(body);
            } catch (const std::exception&) {
                fail(line_no, "bad rotation angle '" + body + "'");
            }
        } else if (head == "macro") {
            instr.opcode = Opcode::Macro;
            if (tokens.size() < 2) fail(line_no, "macro needs a label");
            instr.label = tokens[1];
            pos = 2;
        } else {
            fail(line_no, "unknown opcode '" + head + "'");
        }

        // Qubit operands.
        while (pos < tokens.size()) {
            std::size_t q;
            if (!parse_index(tokens[pos], q)) break;
            instr.qubits.push_back(q);
            ++pos;
        }

        if (pos < tokens.size() && tokens[pos] == "->") {
            ++pos;
            std::size_t c;
            if (pos >= tokens.size() || !parse_index(tokens[pos], c))
                fail(line_no, "expected clbit after '->'");
            instr.clbits.push_back(c);
            ++pos;
        }
        if (pos < tokens.size() && tokens[pos] == "if") {
            ++pos;
            std::size_t c;
            while (pos < tokens.size() && parse_index(tokens[pos], c)) {
                instr.condition.push_back(c);
                ++pos;
            }
            if (instr.condition.empty()) fail(line_no, "'if' needs at least one clbit");
        }
        while (pos < tokens.size()) {
            const std::string& tok = tokens[pos];
            if (tok.rfind("dur=", 0) == 0) {
                try {
                    long long v = std::stoll(tok.substr(4));
                    if (v < 0) fail(line_no, "negative duration");
                    instr.duration_override = v;
                } catch (const std::runtime_error&) {
                    throw;
                } catch (const std::exception&) {
                    fail(line_no, "bad duration '" + tok + "'");
                }
            } else if (tok.rfind("tag=", 0) == 0) {
                instr.tag = tok.substr(4);
            } else {
                fail(line_no, "unexpected token '" + tok + "'");
            }
            ++pos;
        }

        ensure_sized(line_no);
        try {
            circuit.append(std::move(instr));
        } catch (const std::exception& e) {
            fail(line_no, e.what());
        }
    }
    ensure_sized(line_no);
    return circuit;
}

std::string serialize_circuit(const Circuit& circuit) {
    std::ostringstream out;
    out << "qubits " << circuit.num_qubits() << "\n";
    out << "clbits " << circuit.num_clbits() << "\n";
    for (std::size_t q = 0; q < circuit.num_qubits(); ++q) {
        switch (circuit.role(q)) {
            case QubitRole::Data: out << "role " << q << " DATA\n"; break;
            case QubitRole::Work: out << "role " << q << " WORK\n"; break;
            case QubitRole::Comm: out << "role " << q << " COMM\n"; break;
            case QubitRole::Ancilla: break;
        }
    }
    for (std::size_t q = 0; q < circuit.num_qubits(); ++q) {
        switch (circuit.partition(q)) {
            case Partition::QpuA: out << "qpu " << q << " A\n"; break;
            case Partition::QpuB: out << "qpu " << q << " B\n"; break;
            case Partition::None: break;
        }
    }
    for (const Instruction& instr : circuit.instructions()) {
        if (instr.opcode == Opcode::P) {
            out << "p(" << format_angle(instr.angle) << ")";
        } else if (instr.opcode == Opcode::Macro) {
            out << "macro " << instr.label;
        } else {
            out << opcode_name(instr.opcode);
        }
        for (std::size_t q : instr.qubits) out << " " << q;
        if (!instr.clbits.empty()) out << " -> " << instr.clbits[0];
        if (!instr.condition.empty()) {
            out << " if";
            for (std::size_t c : instr.condition) out << " " << c;
        }
        if (instr.duration_override) out << " dur=" << *instr.duration_override;
        if (!instr.tag.empty()) out << " tag=" << instr.tag;
        out << "\n";
    }
    return out.str();
}

Circuit load_circuit_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open circuit file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    Circuit c = parse_circuit(buf.str());
    c.set_name(path);
    return c;
}

void save_circuit_file(const Circuit& circuit, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write circuit file '" + path + "'");
    out << serialize_circuit(circuit);
}

}  // namespace qsta
