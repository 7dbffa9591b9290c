#include "unipart/scaling.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>

#include "unipart/errors.hpp"

namespace unipart {

ScalingFit fit_scaling(const std::vector<ScalingPoint>& points) {
    if (points.size() < 3) throw ContractError("scaling fit needs at least 3 data points");
    const Eigen::Index n = static_cast<Eigen::Index>(points.size());
    Eigen::MatrixXd design(n, 2);
    Eigen::VectorXd log_terms(n);
    Eigen::VectorXd log_groups(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& p = points[static_cast<std::size_t>(i)];
        if (p.n_qubits <= 0 || p.total_terms <= 0 || p.n_groups <= 0)
            throw ContractError("scaling fit needs positive counts");
        design(i, 0) = std::log10(p.n_qubits);
        design(i, 1) = 1.0;
        log_terms(i) = std::log10(p.total_terms);
        log_groups(i) = std::log10(p.n_groups);
    }
    const Eigen::Vector2d term_fit = design.colPivHouseholderQr().solve(log_terms);
    const Eigen::Vector2d group_fit = design.colPivHouseholderQr().solve(log_groups);
    return {term_fit(0), term_fit(1), group_fit(0), group_fit(1)};
}

std::string scaling_csv(const std::vector<ScalingPoint>& points) {
    std::string out = "label,n_qubits,log10_n_qubits,log10_total_terms,log10_n_groups\n";
    char buf[160];
    for (const auto& p : points) {
        std::snprintf(buf, sizeof(buf), "%s,%g,%.12g,%.12g,%.12g\n", p.label.c_str(), p.n_qubits,
                      std::log10(p.n_qubits), std::log10(p.total_terms), std::log10(p.n_groups));
        out += buf;
    }
    return out;
}

}  // namespace unipart
