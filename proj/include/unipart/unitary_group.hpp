#pragma once

#include <vector>

#include "unipart/clique_cover.hpp"
#include "unipart/dense.hpp"
#include "unipart/hamiltonian.hpp"

namespace unipart {

// Matrix caps for the two oracle routines below.
inline constexpr std::size_t kGroupMatrixQubitCap = 10;

// The entangler-sequence product for a group reproduces the group operator
// only up to this global phase (a factor of i), pinned by the L = 1 dense
// oracle; the measurement circuit cancels it on the ancilla.
inline constexpr double kDecompositionGlobalPhase = 1.5707963267948966;  // pi/2

struct GroupTerm {
    double coefficient = 0.0;  // unit-norm c_k, sign included
    PauliWord word;
};

// One clique of mutually anticommuting words, renormalized so the linear
// combination is unitary: sum c_k^2 = 1, d > 0, and d * c_k recovers the
// original Hamiltonian coefficients.
struct UnitaryGroup {
    std::vector<GroupTerm> terms;
    double d = 0.0;
    std::vector<double> thetas;

    std::size_t size() const { return terms.size(); }
    std::size_t n_qubits() const { return terms.empty() ? 0 : terms.front().word.n_qubits(); }
};

// One group per clique of p, coefficients normalized and angles populated.
// The partition must be valid for h's anticommutativity structure.
std::vector<UnitaryGroup> build_unitary_groups(const QubitHamiltonian& h, const Partition& p);

// Expands d * c_k over all groups back into a canonical Hamiltonian;
// inverse of build_unitary_groups.
QubitHamiltonian reconstruct(const std::vector<UnitaryGroup>& groups, double identity_offset,
                             std::size_t n_qubits = 0);

// Hyper-spherical angles theta_k = arcsin(c_k / sqrt(sum_{j<=k} c_j^2)) for a
// unit-norm coefficient vector. A vanishing prefix under a nonzero c_k means
// the caller must put a nonzero coefficient first.
std::vector<double> theta_angles(const std::vector<double>& unit_coefficients);

// Dense sum c_k P_k; Hermitian and unitary for a well-formed group.
ComplexMatrix group_operator_matrix(const UnitaryGroup& g);

// Dense ordered product of the 2L-1 Pauli exponents; equals
// exp(i * kDecompositionGlobalPhase) * group_operator_matrix(g).
ComplexMatrix decomposition_matrix(const UnitaryGroup& g);

}  // namespace unipart
