#pragma once

#include <stdexcept>

namespace kitefree {

// Raised when an exact-search or enumeration input exceeds its configured
// desk-scale size bound.
struct BoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace kitefree
