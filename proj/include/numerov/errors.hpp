#pragma once

#include <stdexcept>
#include <string>

namespace numerov {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Grid and domain errors.
struct InvalidGrid : Error { using Error::Error; };
struct OutOfDomain : Error { using Error::Error; };

// Potential / mass sampling errors.
struct BarrierUnderResolved : Error { using Error::Error; };
struct BarrierOutsideDomain : Error { using Error::Error; };
struct NonPositiveMass : Error { using Error::Error; };

// Assembly and solve errors.
struct DimensionMismatch : Error { using Error::Error; };
struct ModeCountTooLarge : Error { using Error::Error; };
struct SolverFailure : Error { using Error::Error; };
struct ZeroVector : Error { using Error::Error; };

// Analysis errors.
struct BarrierTooCloseToBoundary : Error { using Error::Error; };
struct NonPositiveEnergy : Error { using Error::Error; };
struct ZeroAlpha : Error { using Error::Error; };
struct EnergyCollision : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };

/// Config-file problems; message carries line/field diagnostics.
struct ConfigError : Error { using Error::Error; };

}
