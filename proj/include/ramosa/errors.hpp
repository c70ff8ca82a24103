#pragma once

#include <stdexcept>
#include <string>

namespace ramosa {

// Invalid input data or a violated operation precondition. The CLI maps
// these to exit code 2.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A broken internal invariant. Maps to exit code 3.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace ramosa
