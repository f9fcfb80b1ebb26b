#pragma once

#include <stdexcept>
#include <string>

namespace homrep {

// Base class for all errors raised by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed arguments: bad sizes, indices outside their range, unparsable text.
struct invalid_input_error : error {
    using error::error;
};

// Structurally valid input that a formula cannot accept, e.g. coincident
// points handed to a route that divides by their differences.
struct degenerate_input_error : invalid_input_error {
    using invalid_input_error::invalid_input_error;
};

// A matrix that must be invertible is singular.
struct singular_matrix_error : error {
    using error::error;
};

// A truncated series with zero constant term has no reciprocal.
struct singular_series_error : error {
    using error::error;
};

// A brute-force enumeration would exceed its configured term cap.
struct size_error : error {
    using error::error;
};

} // namespace homrep
