#pragma once

#include <stdexcept>

namespace og10lat {

// Violated precondition on an operation input. The CLI maps this to exit
// code 1 (invalid input).
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input is structurally valid but the requested object does not exist
// mathematically (degenerate form, non-integral glue pairing, ...). The CLI
// maps this to exit code 2.
class math_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace og10lat
