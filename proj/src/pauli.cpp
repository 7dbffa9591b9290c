#include "unipart/pauli.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace unipart {

namespace {

void require_same_size(const PauliWord& p, const PauliWord& q) {
    if (p.n_qubits() != q.n_qubits())
        throw DimensionError("Pauli words act on different qubit counts (" +
                             std::to_string(p.n_qubits()) + " vs " + std::to_string(q.n_qubits()) + ")");
}

}  // namespace

std::pair<Phase, PauliWord> multiply(const PauliWord& p, const PauliWord& q) {
    require_same_size(p, q);
    BitVector rx = p.x_bits() ^ q.x_bits();
    BitVector rz = p.z_bits() ^ q.z_bits();
    // Per qubit, with sigma(x,z) = i^{xz} X^x Z^z:
    //   sigma(x1,z1) sigma(x2,z2) = i^{x1 z1 + x2 z2 + 2 z1 x2 - x3 z3} sigma(x3,z3).
    // Summing the exponent over qubits is four AND-popcounts.
    const std::size_t e = p.x_bits().and_count(p.z_bits()) + q.x_bits().and_count(q.z_bits()) +
                          2 * p.z_bits().and_count(q.x_bits());
    const std::size_t f = rx.and_count(rz);
    const int phase = static_cast<int>(e % 4) - static_cast<int>(f % 4);
    return {Phase(phase), PauliWord(p.n_qubits(), std::move(rx), std::move(rz))};
}

bool commutes(const PauliWord& p, const PauliWord& q) {
    require_same_size(p, q);
    const std::size_t form = p.x_bits().and_count(q.z_bits()) + p.z_bits().and_count(q.x_bits());
    return (form & 1) == 0;
}

bool anticommutes(const PauliWord& p, const PauliWord& q) { return !commutes(p, q); }

bool qubit_wise_commutes(const PauliWord& p, const PauliWord& q) {
    require_same_size(p, q);
    // Conflict on qubit i: both factors non-identity and different.
    const BitVector both = (p.x_bits() | p.z_bits()) & (q.x_bits() | q.z_bits());
    const BitVector differ = (p.x_bits() ^ q.x_bits()) | (p.z_bits() ^ q.z_bits());
    return !both.intersects(differ);
}

std::string PauliWord::str() const {
    std::string out;
    for (std::size_t i = 0; i < n_; ++i) {
        const PauliOp op = factor(i);
        if (op == PauliOp::I) continue;
        if (!out.empty()) out += ' ';
        out += op == PauliOp::X ? 'X' : op == PauliOp::Y ? 'Y' : 'Z';
        out += std::to_string(i);
    }
    return out;
}

PauliWord parse_factors(const std::string& text, std::size_t n_qubits, int line_no) {
    struct Factor {
        PauliOp op;
        std::size_t qubit;
    };
    std::vector<Factor> factors;
    std::size_t max_index = 0;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        PauliOp op;
        switch (tok[0]) {
            case 'X': op = PauliOp::X; break;
            case 'Y': op = PauliOp::Y; break;
            case 'Z': op = PauliOp::Z; break;
            default: throw ParseError(line_no, "unknown Pauli factor '" + tok + "'");
        }
        const std::string digits = tok.substr(1);
        if (digits.empty()) throw ParseError(line_no, "factor '" + tok + "' is missing a qubit index");
        for (char c : digits)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError(line_no, "bad qubit index in factor '" + tok + "'");
        const std::size_t qubit = std::stoul(digits);
        factors.push_back({op, qubit});
        if (qubit + 1 > max_index) max_index = qubit + 1;
    }
    if (n_qubits == 0) n_qubits = max_index ? max_index : 1;
    PauliWord word(n_qubits);
    for (const auto& f : factors) {
        if (f.qubit >= n_qubits)
            throw ParseError(line_no, "qubit index " + std::to_string(f.qubit) + " exceeds qubit count " +
                                          std::to_string(n_qubits));
        if (word.factor(f.qubit) != PauliOp::I)
            throw ParseError(line_no, "duplicate qubit index " + std::to_string(f.qubit) + " in Pauli word");
        word.set_factor(f.qubit, f.op);
    }
    return word;
}

PauliWord PauliWord::parse(const std::string& text, std::size_t n_qubits) {
    return parse_factors(text, n_qubits, 0);
}

}  // namespace unipart
