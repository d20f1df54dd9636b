#pragma once

#include <stdexcept>

namespace gl2 {

// Root of the library's error hierarchy.  Every contract violation throws a
// subtype of this; nothing here is recoverable state, only diagnosis.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrime : Error { using Error::Error; };
struct EvenCharacteristic : Error { using Error::Error; };
struct BadExponent : Error { using Error::Error; };
struct ParamMismatch : Error { using Error::Error; };
struct ModulusMismatch : Error { using Error::Error; };
struct NotAnInteger : Error { using Error::Error; };
struct MalformedLabel : Error { using Error::Error; };
struct DegeneratePrincipalSeries : Error { using Error::Error; };
struct DecomposableCuspidalLabel : Error { using Error::Error; };
struct NegativeMultiplicity : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct DegenerateInput : Error { using Error::Error; };

} // namespace gl2
