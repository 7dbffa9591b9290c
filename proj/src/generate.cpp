#include "unipart/generate.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "unipart/errors.hpp"

namespace unipart {

namespace {

PauliWord word_from_code(std::size_t n_qubits, std::uint64_t code) {
    // 2 bits per qubit: (x, z) pair.
    PauliWord w(n_qubits);
    BitVector x(n_qubits), z(n_qubits);
    for (std::size_t q = 0; q < n_qubits; ++q) {
        x.set(q, (code >> (2 * q)) & 1);
        z.set(q, (code >> (2 * q + 1)) & 1);
    }
    return PauliWord(n_qubits, x, z);
}

}  // namespace

QubitHamiltonian random_hamiltonian(std::size_t n_qubits, std::size_t n_terms, double coefficient_scale,
                                    std::uint64_t seed) {
    if (n_qubits == 0) throw ContractError("need at least one qubit");
    if (n_qubits > 31) throw ContractError("generator supports at most 31 qubits");
    const std::uint64_t space = (std::uint64_t{1} << (2 * n_qubits)) - 1;  // non-identity words
    if (n_terms > space)
        throw ContractError("cannot draw " + std::to_string(n_terms) + " distinct non-identity words on " +
                            std::to_string(n_qubits) + " qubits (only " + std::to_string(space) + " exist)");

    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> codes;
    if (n_terms * 2 > space) {
        // Dense draw: partial Fisher-Yates over the full word list.
        std::vector<std::uint64_t> all(space);
        for (std::uint64_t c = 0; c < space; ++c) all[c] = c + 1;
        for (std::size_t i = 0; i < n_terms; ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, all.size() - 1);
            std::swap(all[i], all[pick(rng)]);
        }
        codes.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n_terms));
    } else {
        std::set<std::uint64_t> seen;
        std::uniform_int_distribution<std::uint64_t> draw(1, space);
        while (seen.size() < n_terms) seen.insert(draw(rng));
        codes.assign(seen.begin(), seen.end());
        // Restore draw order independence: shuffle deterministically so the
        // set's sorted order does not bias term order before canonicalize.
        for (std::size_t i = codes.size(); i > 1; --i) {
            std::uniform_int_distribution<std::size_t> pick(0, i - 1);
            std::swap(codes[i - 1], codes[pick(rng)]);
        }
    }

    std::normal_distribution<double> coeff(0.0, coefficient_scale);
    QubitHamiltonian h;
    h.n_qubits = n_qubits;
    for (std::uint64_t c : codes) h.terms.push_back({coeff(rng), word_from_code(n_qubits, c)});
    return canonicalize(h, 0.0);
}

}  // namespace unipart
