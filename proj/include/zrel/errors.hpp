#pragma once

#include <stdexcept>

namespace zrel {

// Violated operation precondition: bad input or out-of-range parameter.
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Broken internal invariant. Seeing one of these is a bug, not a usage error.
class invariant_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace zrel
