#pragma once

#include <stdexcept>
#include <string>

namespace permucover {

// Bad user input: malformed rationals, duplicate generators, dimension
// mismatches, out-of-range indices. CLI maps this to exit code 4.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured resource limit was exceeded (vertex cap, exhaustive-mode cap,
// branch-and-bound timeout). CLI maps this to exit code 3.
class LimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Numerical failure: non-convergent root finding, path tracking driven too
// close to a branch point, residuals out of tolerance.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace permucover
