#pragma once

#include <string>
#include <vector>

#include "unipart/pauli.hpp"

namespace unipart {

inline constexpr double kDefaultPruneThreshold = 1e-12;

struct HamiltonianTerm {
    double coefficient = 0.0;
    PauliWord word;
};

// Real-weighted sum of Pauli words plus a scalar identity offset. Identity
// never appears in terms; it is held in identity_offset, which keeps the term
// list aligned with what actually needs measuring.
struct QubitHamiltonian {
    std::size_t n_qubits = 1;
    std::vector<HamiltonianTerm> terms;
    double identity_offset = 0.0;
};

// Line-oriented text format:
//   # comment
//   qubits: N            (optional; otherwise 1 + max index seen)
//   <real> [X0 Z3 ...]   one term per line, `[]` adds to the identity offset
// Coefficients in complex syntax `(a+bj)` are accepted only when the
// imaginary part is exactly zero.
QubitHamiltonian parse_hamiltonian(const std::string& text);
QubitHamiltonian load_hamiltonian(const std::string& path);

// Merges duplicate words, folds identity terms into the offset, prunes
// |coefficient| < prune_threshold, and sorts terms by (x_bits, z_bits).
// Idempotent.
QubitHamiltonian canonicalize(const QubitHamiltonian& h, double prune_threshold = kDefaultPruneThreshold);

// Emits the text format with 17 significant digits; parse_hamiltonian of the
// result reproduces the input exactly.
std::string serialize_hamiltonian(const QubitHamiltonian& h);
void save_hamiltonian(const QubitHamiltonian& h, const std::string& path);

}  // namespace unipart
