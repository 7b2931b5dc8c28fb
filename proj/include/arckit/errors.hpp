#pragma once
#include <stdexcept>
#include <string>

namespace arckit {

// Input text could not be parsed. Carries a 1-based line/column when known.
struct parse_error : std::runtime_error {
    int line = 0, col = 0;
    parse_error(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) +
                             ", col " + std::to_string(col_) + ")"),
          line(line_), col(col_) {}
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Values from different ring / truncation contexts were mixed.
struct context_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A required t-order certificate is missing, undetermined, or inconsistent.
struct order_error : std::domain_error {
    using std::domain_error::domain_error;
};

// A numeric parameter is outside its documented range.
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed the configured assignment budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A runtime divisibility / liftability check failed. Not a bug: reports
// that the requested construction does not exist for the given input.
struct obstruction_error : std::runtime_error {
    std::string detail;
    explicit obstruction_error(const std::string& msg)
        : std::runtime_error(msg), detail(msg) {}
};

} // namespace arckit
