#pragma once

#include <stdexcept>
#include <string>

namespace jcd {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed text input (rational literal, coefficient list, matrix, document).
struct parse_error : error {
    using error::error;
};

// Operands whose sizes do not fit together, or an empty dimension.
struct dimension_error : error {
    using error::error;
};

// Exact elimination found no nonzero pivot: the matrix has no inverse.
struct singular_matrix_error : error {
    using error::error;
};

// Modular inverse requested for a residue that shares a factor with the modulus.
struct not_coprime_error : error {
    using error::error;
};

// A user-supplied annihilating polynomial does not annihilate the matrix.
struct invalid_annihilator_error : error {
    using error::error;
};

// The alleged nilpotent part has full-degree powers that never vanish.
struct not_nilpotent_error : error {
    using error::error;
};

// Two congruence targets collide (same root listed twice).
struct duplicate_root_error : error {
    using error::error;
};

// Any other violated mathematical precondition (division by zero, constant
// modulus, negative exponent, ...).
struct precondition_error : error {
    using error::error;
};

} // namespace jcd
