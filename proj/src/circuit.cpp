#include "unipart/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace unipart {

namespace {

constexpr double kHalfPi = 1.5707963267948966;

bool gate_has_angle(GateKind k) { return k == GateKind::RX || k == GateKind::RZ || k == GateKind::CRZ || k == GateKind::PHASE; }
bool gate_has_control(GateKind k) { return k == GateKind::CX || k == GateKind::CRZ; }

std::string kind_name(GateKind k) {
    switch (k) {
        case GateKind::H: return "H";
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::S: return "S";
        case GateKind::SDG: return "SDG";
        case GateKind::RX: return "RX";
        case GateKind::RZ: return "RZ";
        case GateKind::CX: return "CX";
        case GateKind::CRZ: return "CRZ";
        case GateKind::PHASE: return "PHASE";
    }
    return "?";
}

std::string format_angle(double a) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", a);
    return buf;
}

}  // namespace

std::size_t Circuit::ancilla() const {
    if (!has_ancilla) throw ContractError("circuit has no ancilla");
    return n_system_qubits;
}

void Circuit::add(const Gate& g) {
    const std::size_t n = total_qubits();
    if (g.target >= n) throw ContractError("gate target " + std::to_string(g.target) + " out of range");
    if (gate_has_control(g.kind)) {
        if (g.control >= n) throw ContractError("gate control out of range");
        if (g.control == g.target) throw ContractError("gate control equals target");
    }
    if (gate_has_angle(g.kind) && !std::isfinite(g.angle)) throw ContractError("gate angle is not finite");
    gates.push_back(g);
}

void Circuit::append(const Circuit& c) {
    if (c.n_system_qubits != n_system_qubits)
        throw DimensionError("appended circuit acts on a different system register");
    if (c.has_ancilla && !has_ancilla) throw ContractError("appended circuit uses an ancilla this one lacks");
    for (const Gate& g : c.gates) add(g);
    entangler_count += c.entangler_count;
}

namespace {

// Shared ladder synthesis; `control` = kNoControl gives the plain block.
Circuit exp_block(const PauliWord& p, double theta, bool controlled) {
    Circuit c;
    c.n_system_qubits = p.n_qubits();
    c.has_ancilla = controlled;
    if (p.is_identity()) return c;  // exp(i theta / 2) is a global phase

    std::vector<std::size_t> support;
    for (std::size_t q = 0; q < p.n_qubits(); ++q)
        if (p.factor(q) != PauliOp::I) support.push_back(q);

    auto basis_in = [&](std::size_t q) {
        if (p.factor(q) == PauliOp::X) c.add(Gate::h(q));
        if (p.factor(q) == PauliOp::Y) c.add(Gate::rx(kHalfPi, q));
    };
    auto basis_out = [&](std::size_t q) {
        if (p.factor(q) == PauliOp::X) c.add(Gate::h(q));
        if (p.factor(q) == PauliOp::Y) c.add(Gate::rx(-kHalfPi, q));
    };

    for (std::size_t q : support) basis_in(q);
    for (std::size_t i = 0; i + 1 < support.size(); ++i) c.add(Gate::cx(support[i], support[i + 1]));
    if (controlled) {
        c.add(Gate::crz(-theta, c.ancilla(), support.back()));
    } else {
        c.add(Gate::rz(-theta, support.back()));
    }
    for (std::size_t i = support.size() - 1; i-- > 0;) c.add(Gate::cx(support[i], support[i + 1]));
    for (std::size_t i = support.size(); i-- > 0;) basis_out(support[i]);
    c.entangler_count = 1;
    return c;
}

}  // namespace

Circuit exp_pauli_circuit(const PauliWord& p, double theta) { return exp_block(p, theta, false); }

Circuit controlled_exp_pauli_circuit(const PauliWord& p, double theta) { return exp_block(p, theta, true); }

Circuit unitary_group_circuit(const UnitaryGroup& g, bool controlled) {
    if (g.terms.empty()) throw ContractError("empty group has no circuit");
    if (g.thetas.size() != g.terms.size()) throw ContractError("thetas not populated");
    Circuit c;
    c.n_system_qubits = g.n_qubits();
    c.has_ancilla = controlled;
    const std::size_t L = g.terms.size();
    // The operator product is palindromic, so gate order matches index order:
    // blocks 1..L-1, the middle block with doubled angle, then L-1..1.
    auto emit = [&](std::size_t k, double theta) {
        c.append(exp_block(g.terms[k].word, theta, controlled));
    };
    for (std::size_t k = 0; k + 1 < L; ++k) emit(k, g.thetas[k]);
    emit(L - 1, 2.0 * g.thetas[L - 1]);
    for (std::size_t k = L - 1; k-- > 0;) emit(k, g.thetas[k]);
    if (controlled) c.add(Gate::phase(-kDecompositionGlobalPhase, c.ancilla()));
    return c;
}

Circuit measurement_circuit(const UnitaryGroup& g, const Circuit& prep) {
    if (prep.has_ancilla) throw ContractError("prep circuit must not touch the ancilla");
    if (prep.n_system_qubits != g.n_qubits())
        throw DimensionError("prep register does not match the group's qubit count");
    Circuit c;
    c.n_system_qubits = g.n_qubits();
    c.has_ancilla = true;
    c.add(Gate::h(c.ancilla()));
    c.append(prep);
    c.append(unitary_group_circuit(g, true));
    c.append(inverse(prep));
    c.add(Gate::h(c.ancilla()));
    return c;
}

Circuit inverse(const Circuit& c) {
    Circuit inv;
    inv.n_system_qubits = c.n_system_qubits;
    inv.has_ancilla = c.has_ancilla;
    inv.entangler_count = c.entangler_count;
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
        Gate g = *it;
        switch (g.kind) {
            case GateKind::S: g.kind = GateKind::SDG; break;
            case GateKind::SDG: g.kind = GateKind::S; break;
            case GateKind::RX:
            case GateKind::RZ:
            case GateKind::CRZ:
            case GateKind::PHASE: g.angle = -g.angle; break;
            default: break;  // H, X, Y, Z, CX are involutions
        }
        inv.gates.push_back(g);
    }
    return inv;
}

GateCounts gate_count(const Circuit& c) {
    GateCounts counts;
    counts.total = c.gates.size();
    counts.entanglers = c.entangler_count;
    std::vector<std::size_t> level(c.total_qubits(), 0);
    for (const Gate& g : c.gates) {
        if (g.kind == GateKind::CX) ++counts.cx;
        std::size_t t = level[g.target];
        if (gate_has_control(g.kind)) t = std::max(t, level[g.control]);
        ++t;
        level[g.target] = t;
        if (gate_has_control(g.kind)) level[g.control] = t;
        counts.depth = std::max(counts.depth, t);
    }
    return counts;
}

std::string serialize_circuit(const Circuit& c) {
    std::string out = "circuit qubits=" + std::to_string(c.n_system_qubits) +
                      " ancilla=" + std::string(c.has_ancilla ? "1" : "0") + "\n";
    auto operand = [&](std::size_t q) {
        return c.has_ancilla && q == c.n_system_qubits ? std::string("a") : std::to_string(q);
    };
    for (const Gate& g : c.gates) {
        out += kind_name(g.kind);
        if (gate_has_angle(g.kind)) out += "(" + format_angle(g.angle) + ")";
        if (gate_has_control(g.kind)) out += " " + operand(g.control);
        out += " " + operand(g.target) + "\n";
    }
    return out;
}

Circuit parse_circuit(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    Circuit c;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head[0] == '#') continue;
        if (head == "circuit") {
            std::string field;
            std::size_t qubits = 0;
            int ancilla = 0;
            bool saw_qubits = false;
            while (ls >> field) {
                if (field.rfind("qubits=", 0) == 0) {
                    qubits = std::stoul(field.substr(7));
                    saw_qubits = true;
                } else if (field.rfind("ancilla=", 0) == 0) {
                    ancilla = std::stoi(field.substr(8));
                } else {
                    throw ParseError(line_no, "unknown header field '" + field + "'");
                }
            }
            if (!saw_qubits) throw ParseError(line_no, "header is missing qubits=");
            c.n_system_qubits = qubits;
            c.has_ancilla = ancilla != 0;
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError(line_no, "expected `circuit qubits=N ancilla=0|1` header first");

        std::string name = head;
        double angle = 0.0;
        const std::size_t paren = head.find('(');
        if (paren != std::string::npos) {
            if (head.back() != ')') throw ParseError(line_no, "unterminated angle in '" + head + "'");
            name = head.substr(0, paren);
            const std::string num = head.substr(paren + 1, head.size() - paren - 2);
            char* end = nullptr;
            angle = std::strtod(num.c_str(), &end);
            if (end == num.c_str() || *end != '\0') throw ParseError(line_no, "bad angle '" + num + "'");
        }
        GateKind kind;
        if (name == "H") kind = GateKind::H;
        else if (name == "X") kind = GateKind::X;
        else if (name == "Y") kind = GateKind::Y;
        else if (name == "Z") kind = GateKind::Z;
        else if (name == "S") kind = GateKind::S;
        else if (name == "SDG") kind = GateKind::SDG;
        else if (name == "RX") kind = GateKind::RX;
        else if (name == "RZ") kind = GateKind::RZ;
        else if (name == "CX") kind = GateKind::CX;
        else if (name == "CRZ") kind = GateKind::CRZ;
        else if (name == "PHASE") kind = GateKind::PHASE;
        else throw ParseError(line_no, "unknown gate '" + name + "'");
        if (gate_has_angle(kind) && paren == std::string::npos)
            throw ParseError(line_no, name + " needs an angle");
        if (!gate_has_angle(kind) && paren != std::string::npos)
            throw ParseError(line_no, name + " takes no angle");

        auto read_operand = [&]() -> std::size_t {
            std::string tok;
            if (!(ls >> tok)) throw ParseError(line_no, "missing operand for " + name);
            if (tok == "a") {
                if (!c.has_ancilla) throw ParseError(line_no, "'a' operand in a circuit without ancilla");
                return c.n_system_qubits;
            }
            for (char ch : tok)
                if (!std::isdigit(static_cast<unsigned char>(ch)))
                    throw ParseError(line_no, "bad operand '" + tok + "'");
            const std::size_t q = std::stoul(tok);
            if (q >= c.n_system_qubits) throw ParseError(line_no, "operand " + tok + " out of range");
            return q;
        };

        Gate g;
        g.kind = kind;
        g.angle = angle;
        if (gate_has_control(kind)) g.control = read_operand();
        g.target = read_operand();
        std::string extra;
        if (ls >> extra) throw ParseError(line_no, "trailing text '" + extra + "'");
        c.add(g);
        // The text format carries no entangler ledger; every RZ/CRZ is the
        // core of one exponential block, which matches synthesized circuits.
        if (kind == GateKind::RZ || kind == GateKind::CRZ) ++c.entangler_count;
    }
    if (!have_header) throw ParseError(0, "missing circuit header");
    return c;
}

Circuit load_circuit(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_circuit(buf.str());
}

}  // namespace unipart
