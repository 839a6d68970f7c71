#pragma once

#include <stdexcept>

namespace memcap {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroVariance : Error { using Error::Error; };
struct LagTooLarge : Error { using Error::Error; };
struct NotPSD : Error { using Error::Error; };
struct DegenerateShape : Error { using Error::Error; };
struct InvalidSpec : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct Divergence : Error { using Error::Error; };
struct ZeroSpectralRadius : Error { using Error::Error; };
struct EigenFailure : Error { using Error::Error; };
struct DegenerateStates : Error { using Error::Error; };
struct SingularGram : Error { using Error::Error; };
struct ImaginaryResidue : Error { using Error::Error; };
struct BasisNotOrthonormal : Error { using Error::Error; };
struct NotConverged : Error { using Error::Error; };

// Experiment harness surface.
struct ConfigError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct ChannelNotFound : Error { using Error::Error; };
struct NonFiniteValue : Error { using Error::Error; };

}  // namespace memcap
