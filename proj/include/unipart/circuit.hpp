#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "unipart/pauli.hpp"
#include "unipart/unitary_group.hpp"

namespace unipart {

enum class GateKind { H, X, Y, Z, S, SDG, RX, RZ, CX, CRZ, PHASE };

inline constexpr std::size_t kNoControl = ~std::size_t{0};

// Conventions locked by the dense oracle tests:
//   RZ(a)    = diag(e^{-ia/2}, e^{ia/2})
//   RX(a)    = exp(-i a X / 2)
//   PHASE(a) = diag(1, e^{ia})
//   CRZ(a)   = |0><0| (x) 1 + |1><1| (x) RZ(a)
struct Gate {
    GateKind kind = GateKind::H;
    double angle = 0.0;
    std::size_t target = 0;
    std::size_t control = kNoControl;

    static Gate h(std::size_t q) { return {GateKind::H, 0.0, q, kNoControl}; }
    static Gate x(std::size_t q) { return {GateKind::X, 0.0, q, kNoControl}; }
    static Gate y(std::size_t q) { return {GateKind::Y, 0.0, q, kNoControl}; }
    static Gate z(std::size_t q) { return {GateKind::Z, 0.0, q, kNoControl}; }
    static Gate s(std::size_t q) { return {GateKind::S, 0.0, q, kNoControl}; }
    static Gate sdg(std::size_t q) { return {GateKind::SDG, 0.0, q, kNoControl}; }
    static Gate rx(double a, std::size_t q) { return {GateKind::RX, a, q, kNoControl}; }
    static Gate rz(double a, std::size_t q) { return {GateKind::RZ, a, q, kNoControl}; }
    static Gate cx(std::size_t c, std::size_t t) { return {GateKind::CX, 0.0, t, c}; }
    static Gate crz(double a, std::size_t c, std::size_t t) { return {GateKind::CRZ, a, t, c}; }
    static Gate phase(double a, std::size_t q) { return {GateKind::PHASE, a, q, kNoControl}; }
};

// Ordered gate list over n_system_qubits system qubits plus, when
// has_ancilla, one ancilla at index n_system_qubits. entangler_count tracks
// the number of exp(i theta P / 2) blocks that went in.
struct Circuit {
    std::size_t n_system_qubits = 0;
    bool has_ancilla = false;
    std::vector<Gate> gates;
    std::size_t entangler_count = 0;

    std::size_t total_qubits() const { return n_system_qubits + (has_ancilla ? 1 : 0); }
    std::size_t ancilla() const;  // index of the ancilla; throws when absent

    void add(const Gate& g);          // validates operands and angle
    void append(const Circuit& c);    // concatenates gates, sums entanglers
};

// exp(i theta p / 2) via basis rotations into Z, a CX parity ladder onto the
// highest support qubit, and RZ(-theta) there. Identity words synthesize to
// an empty block (a pure phase needs no gates).
Circuit exp_pauli_circuit(const PauliWord& p, double theta);

// Same ladder with the rotation replaced by CRZ from the ancilla: identity
// for ancilla |0>, exp(i theta p / 2) for |1>.
Circuit controlled_exp_pauli_circuit(const PauliWord& p, double theta);

// The 2L-1 exponential blocks of the group's decomposition; when controlled,
// every block is ancilla-controlled and one ancilla PHASE cancels the
// decomposition's global phase so the |1> branch applies the group operator
// exactly.
Circuit unitary_group_circuit(const UnitaryGroup& g, bool controlled);

// Hadamard test around the controlled group operator. prep runs uncontrolled
// on the system register and is undone afterwards; with U dagger U = 1 this
// conjugation equals controlling the full sandwiched operator.
Circuit measurement_circuit(const UnitaryGroup& g, const Circuit& prep);

Circuit inverse(const Circuit& c);

struct GateCounts {
    std::size_t total = 0;
    std::size_t cx = 0;
    std::size_t entanglers = 0;
    std::size_t depth = 0;  // ASAP schedule depth
};

GateCounts gate_count(const Circuit& c);

// One gate per line under a `circuit qubits=N ancilla=0|1` header; the
// ancilla operand prints as `a`.
std::string serialize_circuit(const Circuit& c);
Circuit parse_circuit(const std::string& text);
Circuit load_circuit(const std::string& path);

}  // namespace unipart
