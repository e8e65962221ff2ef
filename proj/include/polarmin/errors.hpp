#pragma once

#include <stdexcept>
#include <string>

namespace polarmin {

// Bad inputs: malformed files, invalid leader sets, impossible budgets.
// The CLI maps these to exit code 2.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed text input; carries the 1-based line number of the offending line.
struct ParseError : ValidationError {
    ParseError(const std::string& msg, long line)
        : ValidationError(msg + " (line " + std::to_string(line) + ")"), line(line) {}
    long line;
};

// A requested computation exceeds a configured size cap (dense dimension,
// brute-force subset count).  Mapped to exit code 2 as well: the request,
// not the arithmetic, is at fault.
struct CapacityError : ValidationError {
    explicit CapacityError(const std::string& msg) : ValidationError(msg) {}
};

// Numerical failures: factorization breakdown, loss of positive definiteness.
// The CLI maps these to exit code 3.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// An iterative solve ran out of iterations; carries the residual it reached.
struct ConvergenceError : NumericalError {
    ConvergenceError(const std::string& msg, double achieved_residual)
        : NumericalError(msg + " (achieved relative residual " +
                         std::to_string(achieved_residual) + ")"),
          achieved_residual(achieved_residual) {}
    double achieved_residual;
};

}  // namespace polarmin
