#pragma once

#include <stdexcept>

namespace mv {

// Thrown when an exact identity the algebra relies on fails to hold:
// nonzero remainder in an exact division, imaginary residue where a value
// must be real, a kernel of unexpected dimension.  Not a recoverable state;
// it means a verified identity is false.
struct IdentityViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mv
