#pragma once

#include <stdexcept>

namespace bezout {

/// Base class for everything the library throws.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct division_by_zero : error { using error::error; };
struct dimension_mismatch : error { using error::error; };
struct not_antisymmetric : error { using error::error; };
struct all_zero_input : error { using error::error; };
struct not_a_solution : error { using error::error; };
struct verification_failure : error { using error::error; };
struct index_out_of_range : error { using error::error; };
struct parse_error : error { using error::error; };

}  // namespace bezout
