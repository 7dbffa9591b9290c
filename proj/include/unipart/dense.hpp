#pragma once

#include <Eigen/Dense>

#include "unipart/hamiltonian.hpp"
#include "unipart/pauli.hpp"

namespace unipart {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Dense helpers stay oracle-sized; 2^12 x 2^12 complex is the ceiling.
inline constexpr std::size_t kDenseQubitCap = 12;

// Dense matrix of a Pauli word, little-endian basis ordering (qubit 0 is the
// least significant index bit). A word is a signed permutation: column b maps
// to row b^x with entry i^{#Y} * (-1)^{popcount(b & z)}.
ComplexMatrix pauli_matrix(const PauliWord& p);

ComplexMatrix hamiltonian_matrix(const QubitHamiltonian& h);

}  // namespace unipart
