#pragma once

#include <string>
#include <vector>

namespace unipart {

struct ScalingPoint {
    std::string label;
    double n_qubits = 0.0;
    double total_terms = 0.0;
    double n_groups = 0.0;
};

struct ScalingFit {
    double term_slope = 0.0;
    double term_intercept = 0.0;
    double group_slope = 0.0;
    double group_intercept = 0.0;
};

// Least-squares slopes of log(total_terms) and log(n_groups) against
// log(n_qubits); needs at least three points.
ScalingFit fit_scaling(const std::vector<ScalingPoint>& points);

// Plot-ready CSV of the log10 points.
std::string scaling_csv(const std::vector<ScalingPoint>& points);

}  // namespace unipart
