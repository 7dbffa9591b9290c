#pragma once

#include <cstdint>

#include "unipart/hamiltonian.hpp"

namespace unipart {

// Synthetic instance: n_terms distinct non-identity words drawn uniformly,
// coefficients from N(0, coefficient_scale); deterministic per seed. The
// result is canonical.
QubitHamiltonian random_hamiltonian(std::size_t n_qubits, std::size_t n_terms, double coefficient_scale,
                                    std::uint64_t seed);

}  // namespace unipart
