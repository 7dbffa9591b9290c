#include "unipart/dense.hpp"

#include <bit>

#include "unipart/errors.hpp"

namespace unipart {

namespace {

std::uint64_t low_word(const BitVector& b) { return b.words().empty() ? 0 : b.words()[0]; }

}  // namespace

ComplexMatrix pauli_matrix(const PauliWord& p) {
    if (p.n_qubits() > kDenseQubitCap)
        throw ResourceLimitError("dense Pauli matrix capped at " + std::to_string(kDenseQubitCap) + " qubits");
    const std::size_t dim = std::size_t{1} << p.n_qubits();
    const std::uint64_t x = low_word(p.x_bits());
    const std::uint64_t z = low_word(p.z_bits());
    const int n_y = std::popcount(x & z);
    const std::complex<double> y_phase = Phase(n_y).to_complex();
    ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::uint64_t col = 0; col < dim; ++col) {
        const std::uint64_t row = col ^ x;
        const double sign = (std::popcount(col & z) & 1) ? -1.0 : 1.0;
        m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = sign * y_phase;
    }
    return m;
}

ComplexMatrix hamiltonian_matrix(const QubitHamiltonian& h) {
    if (h.n_qubits > kDenseQubitCap)
        throw ResourceLimitError("dense Hamiltonian matrix capped at " + std::to_string(kDenseQubitCap) + " qubits");
    const Eigen::Index dim = Eigen::Index{1} << h.n_qubits;
    ComplexMatrix m = ComplexMatrix::Identity(dim, dim) * h.identity_offset;
    for (const auto& t : h.terms) {
        if (t.word.n_qubits() != h.n_qubits) throw DimensionError("term width does not match Hamiltonian");
        m += t.coefficient * pauli_matrix(t.word);
    }
    return m;
}

}  // namespace unipart
