#include "unipart/unitary_group.hpp"

#include <algorithm>
#include <cmath>

#include "unipart/errors.hpp"

namespace unipart {

std::vector<double> theta_angles(const std::vector<double>& c) {
    double norm2 = 0.0;
    for (double v : c) norm2 += v * v;
    if (std::abs(norm2 - 1.0) > 1e-9)
        throw ContractError("theta_angles expects unit-norm coefficients, got squared norm " +
                            std::to_string(norm2));
    std::vector<double> thetas(c.size());
    double prefix2 = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        prefix2 += c[k] * c[k];
        const double prefix = std::sqrt(prefix2);
        if (prefix < 1e-14) {
            if (c[k] != 0.0)
                throw ReorderRequiredError("zero-norm prefix at position " + std::to_string(k) +
                                           "; reorder so a nonzero coefficient leads");
            thetas[k] = 0.0;
            continue;
        }
        thetas[k] = std::asin(std::clamp(c[k] / prefix, -1.0, 1.0));
    }
    return thetas;
}

std::vector<UnitaryGroup> build_unitary_groups(const QubitHamiltonian& h, const Partition& p) {
    std::vector<char> seen(h.terms.size(), 0);
    std::size_t covered = 0;
    for (const auto& group : p.groups) {
        for (std::size_t idx : group) {
            if (idx >= h.terms.size())
                throw ContractError("partition references term " + std::to_string(idx) +
                                    " outside the Hamiltonian");
            if (seen[idx]) throw ContractError("partition repeats term " + std::to_string(idx));
            seen[idx] = 1;
            ++covered;
        }
        for (std::size_t a = 0; a < group.size(); ++a)
            for (std::size_t b = a + 1; b < group.size(); ++b)
                if (!anticommutes(h.terms[group[a]].word, h.terms[group[b]].word))
                    throw ContractError("terms " + std::to_string(group[a]) + " and " +
                                        std::to_string(group[b]) + " do not anticommute");
    }
    if (covered != h.terms.size()) throw ContractError("partition does not cover every Hamiltonian term");

    std::vector<UnitaryGroup> out;
    out.reserve(p.groups.size());
    for (const auto& group : p.groups) {
        UnitaryGroup ug;
        double sum2 = 0.0;
        for (std::size_t idx : group) {
            const auto& t = h.terms[idx];
            if (t.coefficient == 0.0) continue;
            ug.terms.push_back({t.coefficient, t.word});
            sum2 += t.coefficient * t.coefficient;
        }
        if (ug.terms.empty() || sum2 <= 0.0)
            throw DegenerateGroupError("group has no weight left after dropping zero coefficients");
        ug.d = std::sqrt(sum2);
        std::vector<double> c(ug.terms.size());
        for (std::size_t k = 0; k < ug.terms.size(); ++k) {
            ug.terms[k].coefficient /= ug.d;
            c[k] = ug.terms[k].coefficient;
        }
        try {
            ug.thetas = theta_angles(c);
        } catch (const ReorderRequiredError&) {
            // Rotate the largest coefficient to the front and retry.
            std::size_t lead = 0;
            for (std::size_t k = 1; k < c.size(); ++k)
                if (std::abs(c[k]) > std::abs(c[lead])) lead = k;
            std::rotate(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(lead), c.end());
            std::rotate(ug.terms.begin(), ug.terms.begin() + static_cast<std::ptrdiff_t>(lead), ug.terms.end());
            ug.thetas = theta_angles(c);
        }
        out.push_back(std::move(ug));
    }
    return out;
}

QubitHamiltonian reconstruct(const std::vector<UnitaryGroup>& groups, double identity_offset,
                             std::size_t n_qubits) {
    QubitHamiltonian h;
    h.identity_offset = identity_offset;
    if (n_qubits == 0) {
        for (const auto& g : groups) n_qubits = std::max(n_qubits, g.n_qubits());
        if (n_qubits == 0) n_qubits = 1;
    }
    h.n_qubits = n_qubits;
    for (const auto& g : groups)
        for (const auto& t : g.terms) h.terms.push_back({g.d * t.coefficient, t.word});
    return canonicalize(h, 0.0);
}

ComplexMatrix group_operator_matrix(const UnitaryGroup& g) {
    if (g.terms.empty()) throw ContractError("empty group has no operator");
    if (g.n_qubits() > kGroupMatrixQubitCap)
        throw ResourceLimitError("group operator matrix capped at " + std::to_string(kGroupMatrixQubitCap) +
                                 " qubits");
    const Eigen::Index dim = Eigen::Index{1} << g.n_qubits();
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    for (const auto& t : g.terms) m += t.coefficient * pauli_matrix(t.word);
    return m;
}

ComplexMatrix decomposition_matrix(const UnitaryGroup& g) {
    if (g.terms.empty()) throw ContractError("empty group has no decomposition");
    if (g.thetas.size() != g.terms.size()) throw ContractError("thetas not populated");
    if (g.n_qubits() > kGroupMatrixQubitCap)
        throw ResourceLimitError("decomposition matrix capped at " + std::to_string(kGroupMatrixQubitCap) +
                                 " qubits");
    const Eigen::Index dim = Eigen::Index{1} << g.n_qubits();
    auto exponent = [&](std::size_t k) -> ComplexMatrix {
        // exp(i theta P / 2) for an involutory P.
        const double half = g.thetas[k] / 2.0;
        return std::cos(half) * ComplexMatrix::Identity(dim, dim) +
               std::complex<double>(0.0, std::sin(half)) * pauli_matrix(g.terms[k].word);
    };
    ComplexMatrix m = ComplexMatrix::Identity(dim, dim);
    const std::size_t L = g.terms.size();
    for (std::size_t k = 0; k < L; ++k) m = m * exponent(k);
    for (std::size_t k = L; k-- > 0;) m = m * exponent(k);
    return m;
}

}  // namespace unipart
