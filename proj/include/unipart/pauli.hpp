#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>

#include "unipart/bitvec.hpp"
#include "unipart/errors.hpp"

namespace unipart {

// Power of i carried by Pauli products: i^value with value mod 4.
struct Phase {
    std::uint8_t value = 0;

    constexpr Phase() = default;
    constexpr explicit Phase(int v) : value(static_cast<std::uint8_t>(((v % 4) + 4) % 4)) {}

    friend constexpr Phase operator*(Phase a, Phase b) { return Phase(a.value + b.value); }
    friend constexpr bool operator==(Phase a, Phase b) { return a.value == b.value; }

    std::complex<double> to_complex() const {
        switch (value) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
};

// Single-qubit factor, encoded by the (x, z) bit pair.
enum class PauliOp : std::uint8_t { I = 0, X = 1, Y = 3, Z = 2 };

// Tensor product of single-qubit Pauli factors in symplectic form: bit i of
// x_bits is set when the factor on qubit i has an X component (X or Y), bit i
// of z_bits when it has a Z component (Z or Y). The all-zero word is the
// identity.
class PauliWord {
  public:
    PauliWord() = default;

    explicit PauliWord(std::size_t n_qubits) : n_(n_qubits), x_(n_qubits), z_(n_qubits) {}

    PauliWord(std::size_t n_qubits, BitVector x, BitVector z)
        : n_(n_qubits), x_(std::move(x)), z_(std::move(z)) {
        if (x_.size() != n_ || z_.size() != n_) throw DimensionError("bit vectors do not match qubit count");
    }

    static PauliWord identity(std::size_t n_qubits) { return PauliWord(n_qubits); }

    static PauliWord single(std::size_t n_qubits, std::size_t qubit, PauliOp op) {
        PauliWord p(n_qubits);
        p.set_factor(qubit, op);
        return p;
    }

    std::size_t n_qubits() const { return n_; }
    const BitVector& x_bits() const { return x_; }
    const BitVector& z_bits() const { return z_; }

    PauliOp factor(std::size_t qubit) const {
        const std::uint8_t x = x_.get(qubit) ? 1 : 0;
        const std::uint8_t z = z_.get(qubit) ? 2 : 0;
        return static_cast<PauliOp>(x | z);
    }

    void set_factor(std::size_t qubit, PauliOp op) {
        const std::uint8_t bits = static_cast<std::uint8_t>(op);
        x_.set(qubit, bits & 1);
        z_.set(qubit, bits & 2);
    }

    bool is_identity() const { return x_.none() && z_.none(); }

    // Number of non-identity factors.
    std::size_t weight() const { return (x_ | z_).count(); }

    bool operator==(const PauliWord& o) const { return n_ == o.n_ && x_ == o.x_ && z_ == o.z_; }

    // Total order on (x_bits, z_bits); canonical Hamiltonian term order.
    int compare(const PauliWord& o) const {
        if (int c = x_.compare(o.x_)) return c;
        return z_.compare(o.z_);
    }
    bool operator<(const PauliWord& o) const { return compare(o) < 0; }

    // Whitespace-separated factors `X3 Y0 Z2`; empty string is the identity.
    std::string str() const;

    // Parses the factor syntax. n_qubits == 0 infers 1 + max index (identity
    // parses to a 1-qubit word).
    static PauliWord parse(const std::string& text, std::size_t n_qubits = 0);

  private:
    std::size_t n_ = 0;
    BitVector x_, z_;
};

// Shared with the Hamiltonian file parser; line_no feeds ParseError.
PauliWord parse_factors(const std::string& text, std::size_t n_qubits, int line_no);

// Matrix product p·q as (phase, word): mat(p)·mat(q) == i^phase · mat(word).
std::pair<Phase, PauliWord> multiply(const PauliWord& p, const PauliWord& q);

// True iff the symplectic form <p.x,q.z> + <p.z,q.x> vanishes mod 2.
bool commutes(const PauliWord& p, const PauliWord& q);

// True iff p and q anticommute; a word never anticommutes with itself.
bool anticommutes(const PauliWord& p, const PauliWord& q);

// True iff on every qubit the factors are equal or at least one is identity.
bool qubit_wise_commutes(const PauliWord& p, const PauliWord& q);

inline std::size_t weight(const PauliWord& p) { return p.weight(); }

}  // namespace unipart
