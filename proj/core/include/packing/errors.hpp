#pragma once

#include <stdexcept>

namespace packing {

/// A configured resource cap was exceeded (simplex count, oracle matrix size).
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An exact cross-check failed: non-integer multiplicity, dual-route
/// disagreement, or an equivariance violation. Always a bug upstream.
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace packing
