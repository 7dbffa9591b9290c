#pragma once

#include <stdexcept>
#include <string>

namespace unipart {

// Operands disagree on qubit or vertex count.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Text input rejected; line is 1-based, 0 when unknown.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& what)
        : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + what : what),
          line(line_no) {}
};

// A stated precondition does not hold.
struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

// Instance exceeds a configured cap (vertex count, qubit count, search budget).
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Group lost all weight to pruning; nothing left to normalize.
struct DegenerateGroupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Angle extraction hit a zero-norm prefix; caller must reorder coefficients.
struct ReorderRequiredError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace unipart
