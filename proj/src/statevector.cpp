#include "unipart/statevector.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <fstream>
#include <random>

#include "unipart/errors.hpp"
#include "unipart/parallel.hpp"

namespace unipart {

namespace {

using Complex = std::complex<double>;

struct Mat2 {
    Complex a, b, c, d;  // [[a, b], [c, d]]
};

Mat2 single_qubit_matrix(const Gate& g) {
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    switch (g.kind) {
        case GateKind::H: return {inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2};
        case GateKind::X: return {0, 1, 1, 0};
        case GateKind::Y: return {0, Complex(0, -1), Complex(0, 1), 0};
        case GateKind::Z: return {1, 0, 0, -1};
        case GateKind::S: return {1, 0, 0, Complex(0, 1)};
        case GateKind::SDG: return {1, 0, 0, Complex(0, -1)};
        case GateKind::RX: {
            const double h = g.angle / 2.0;
            return {std::cos(h), Complex(0, -std::sin(h)), Complex(0, -std::sin(h)), std::cos(h)};
        }
        case GateKind::RZ: {
            const double h = g.angle / 2.0;
            return {std::exp(Complex(0, -h)), 0, 0, std::exp(Complex(0, h))};
        }
        case GateKind::PHASE: return {1, 0, 0, std::exp(Complex(0, g.angle))};
        default: throw ContractError("not a single-qubit gate");
    }
}

void apply_single(ComplexVector& amp, std::size_t n_qubits, std::size_t q, const Mat2& u, SimMode mode) {
    const std::size_t pairs = std::size_t{1} << (n_qubits - 1);
    const std::size_t low_mask = (std::size_t{1} << q) - 1;
    const std::size_t bit = std::size_t{1} << q;
    auto body = [&](std::size_t k) {
        const std::size_t i0 = ((k & ~low_mask) << 1) | (k & low_mask);
        const std::size_t i1 = i0 | bit;
        const Complex a0 = amp[static_cast<Eigen::Index>(i0)];
        const Complex a1 = amp[static_cast<Eigen::Index>(i1)];
        amp[static_cast<Eigen::Index>(i0)] = u.a * a0 + u.b * a1;
        amp[static_cast<Eigen::Index>(i1)] = u.c * a0 + u.d * a1;
    };
    if (mode == SimMode::Parallel) {
        parallel_for(pairs, body);
    } else {
        for (std::size_t k = 0; k < pairs; ++k) body(k);
    }
}

void apply_cx(ComplexVector& amp, std::size_t n_qubits, std::size_t control, std::size_t target, SimMode mode) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    auto body = [&](std::size_t i) {
        if ((i & cbit) && !(i & tbit)) std::swap(amp[static_cast<Eigen::Index>(i)], amp[static_cast<Eigen::Index>(i | tbit)]);
    };
    if (mode == SimMode::Parallel) {
        parallel_for(dim, body);
    } else {
        for (std::size_t i = 0; i < dim; ++i) body(i);
    }
}

void apply_crz(ComplexVector& amp, std::size_t n_qubits, std::size_t control, std::size_t target, double angle,
               SimMode mode) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    const Complex minus = std::exp(Complex(0, -angle / 2.0));
    const Complex plus = std::exp(Complex(0, angle / 2.0));
    auto body = [&](std::size_t i) {
        if (i & cbit) amp[static_cast<Eigen::Index>(i)] *= (i & tbit) ? plus : minus;
    };
    if (mode == SimMode::Parallel) {
        parallel_for(dim, body);
    } else {
        for (std::size_t i = 0; i < dim; ++i) body(i);
    }
}

}  // namespace

Statevector Statevector::zero_state(std::size_t n_qubits) {
    Statevector s;
    s.n_qubits = n_qubits;
    s.amplitudes = ComplexVector::Zero(Eigen::Index{1} << n_qubits);
    s.amplitudes[0] = 1.0;
    return s;
}

Statevector simulate(const Circuit& c, std::optional<Statevector> initial, const SimulateOptions& opts) {
    const std::size_t n = c.total_qubits();
    if (n == 0) throw ContractError("cannot simulate an empty register");
    if (n > opts.qubit_cap)
        throw ResourceLimitError("simulation of " + std::to_string(n) + " qubits exceeds the cap of " +
                                 std::to_string(opts.qubit_cap));
    Statevector state = initial ? std::move(*initial) : Statevector::zero_state(n);
    if (state.n_qubits != n) throw DimensionError("initial state does not match the circuit register");
    if (state.amplitudes.size() != (Eigen::Index{1} << n)) throw DimensionError("amplitude array has wrong length");

    for (const Gate& g : c.gates) {
        switch (g.kind) {
            case GateKind::CX: apply_cx(state.amplitudes, n, g.control, g.target, opts.mode); break;
            case GateKind::CRZ: apply_crz(state.amplitudes, n, g.control, g.target, g.angle, opts.mode); break;
            default: apply_single(state.amplitudes, n, g.target, single_qubit_matrix(g), opts.mode); break;
        }
    }
    return state;
}

double expectation_direct(const QubitHamiltonian& h, const Statevector& state) {
    if (h.n_qubits != state.n_qubits)
        throw DimensionError("Hamiltonian acts on " + std::to_string(h.n_qubits) + " qubits, state has " +
                             std::to_string(state.n_qubits));
    if (h.n_qubits > 63) throw ResourceLimitError("bit-kernel expectation limited to 63 qubits");
    const std::size_t dim = std::size_t{1} << h.n_qubits;
    double energy = h.identity_offset;
    for (const auto& t : h.terms) {
        const std::uint64_t x = t.word.x_bits().words().empty() ? 0 : t.word.x_bits().words()[0];
        const std::uint64_t z = t.word.z_bits().words().empty() ? 0 : t.word.z_bits().words()[0];
        const Complex y_phase = Phase(std::popcount(x & z)).to_complex();
        Complex acc = 0.0;
        for (std::size_t b = 0; b < dim; ++b) {
            const double sign = (std::popcount(b & z) & 1) ? -1.0 : 1.0;
            acc += std::conj(state.amplitudes[static_cast<Eigen::Index>(b ^ x)]) * sign *
                   state.amplitudes[static_cast<Eigen::Index>(b)];
        }
        energy += t.coefficient * (y_phase * acc).real();
    }
    return energy;
}

std::pair<double, double> ancilla_probabilities(const Statevector& state, std::size_t ancilla) {
    if (ancilla >= state.n_qubits) throw ContractError("state has no ancilla qubit " + std::to_string(ancilla));
    const std::size_t dim = std::size_t{1} << state.n_qubits;
    const std::size_t abit = std::size_t{1} << ancilla;
    double p_plus = 0.0, p_minus = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        const double w = std::norm(state.amplitudes[static_cast<Eigen::Index>(i)]);
        if (i & abit) {
            p_minus += w;
        } else {
            p_plus += w;
        }
    }
    return {p_plus, p_minus};
}

namespace {

void check_reconstruction(const QubitHamiltonian& h, const std::vector<UnitaryGroup>& groups) {
    const QubitHamiltonian back = reconstruct(groups, h.identity_offset, h.n_qubits);
    const QubitHamiltonian canon = canonicalize(h, 0.0);
    if (back.terms.size() != canon.terms.size())
        throw ContractError("groups do not reconstruct the Hamiltonian (term count differs)");
    for (std::size_t i = 0; i < canon.terms.size(); ++i) {
        if (!(back.terms[i].word == canon.terms[i].word) ||
            std::abs(back.terms[i].coefficient - canon.terms[i].coefficient) >
                1e-9 * std::max(1.0, std::abs(canon.terms[i].coefficient)))
            throw ContractError("groups do not reconstruct the Hamiltonian (term " + std::to_string(i) + ")");
    }
}

double group_z_expectation(const UnitaryGroup& g, const Circuit& prep, const SimulateOptions& opts) {
    const Circuit mc = measurement_circuit(g, prep);
    const Statevector out = simulate(mc, std::nullopt, opts);
    const auto [p_plus, p_minus] = ancilla_probabilities(out, mc.ancilla());
    return p_plus - p_minus;
}

}  // namespace

double estimate_energy_exact(const QubitHamiltonian& h, const std::vector<UnitaryGroup>& groups,
                             const Circuit& prep, const SimulateOptions& opts) {
    check_reconstruction(h, groups);
    double energy = h.identity_offset;
    for (const auto& g : groups) energy += g.d * group_z_expectation(g, prep, opts);
    return energy;
}

SampledEnergy estimate_energy_sampled(const QubitHamiltonian& h, const std::vector<UnitaryGroup>& groups,
                                      const Circuit& prep, std::uint64_t shots, std::uint64_t seed,
                                      const SimulateOptions& opts) {
    if (shots == 0) throw ContractError("shot count must be at least 1");
    check_reconstruction(h, groups);
    SampledEnergy result;
    result.energy = h.identity_offset;
    double variance = 0.0;
    for (std::size_t n = 0; n < groups.size(); ++n) {
        const double z = group_z_expectation(groups[n], prep, opts);
        double p_plus = std::clamp((1.0 + z) / 2.0, 0.0, 1.0);
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + n + 1);
        std::binomial_distribution<std::uint64_t> dist(shots, p_plus);
        const double hits = static_cast<double>(dist(rng));
        const double p_hat = hits / static_cast<double>(shots);
        result.energy += groups[n].d * (2.0 * p_hat - 1.0);
        variance += groups[n].d * groups[n].d * 4.0 * p_hat * (1.0 - p_hat) / static_cast<double>(shots);
    }
    result.std_error = std::sqrt(variance);
    return result;
}

void save_statevector(const Statevector& state, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError(0, "cannot write '" + path + "'");
    const std::uint64_t n = state.n_qubits;
    out.write(reinterpret_cast<const char*>(&n), sizeof(n));
    for (Eigen::Index i = 0; i < state.amplitudes.size(); ++i) {
        const double re = state.amplitudes[i].real();
        const double im = state.amplitudes[i].imag();
        out.write(reinterpret_cast<const char*>(&re), sizeof(re));
        out.write(reinterpret_cast<const char*>(&im), sizeof(im));
    }
}

Statevector load_statevector(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    std::uint64_t n = 0;
    in.read(reinterpret_cast<char*>(&n), sizeof(n));
    if (!in || n > kSimulatorQubitCap) throw ParseError(0, "bad statevector header in '" + path + "'");
    Statevector s;
    s.n_qubits = static_cast<std::size_t>(n);
    s.amplitudes = ComplexVector::Zero(Eigen::Index{1} << n);
    for (Eigen::Index i = 0; i < s.amplitudes.size(); ++i) {
        double re = 0.0, im = 0.0;
        in.read(reinterpret_cast<char*>(&re), sizeof(re));
        in.read(reinterpret_cast<char*>(&im), sizeof(im));
        if (!in) throw ParseError(0, "truncated statevector in '" + path + "'");
        s.amplitudes[i] = Complex(re, im);
    }
    return s;
}

}  // namespace unipart
