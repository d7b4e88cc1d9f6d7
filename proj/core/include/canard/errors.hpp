#pragma once

#include <stdexcept>
#include <string>

namespace canard {

// Base class for all library errors so callers can catch one type.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// exact algebra
struct NonzeroRemainder : Error { using Error::Error; };
struct PoleMismatch : Error { using Error::Error; };
struct EvalAtPole : Error { using Error::Error; };
struct ZeroConstantTerm : Error { using Error::Error; };

// formal canard construction
struct DegenerateQ : Error { using Error::Error; };
struct DegenerateF : Error { using Error::Error; };
struct InsufficientPrecision : Error { using Error::Error; };

// relief
struct DegeneratePath : Error { using Error::Error; };
struct StagnationAtCol : Error { using Error::Error; };

// integration
struct PoleEncountered : Error { using Error::Error; };
struct StepUnderflow : Error { using Error::Error; };
struct MaxStepsExceeded : Error { using Error::Error; };

// shooting / root finding
struct NoConvergence : Error { using Error::Error; };
struct NewtonDivergence : Error { using Error::Error; };

// inner solutions
struct SectorViolation : Error { using Error::Error; };
struct PrecisionLoss : Error { using Error::Error; };
struct ZeroOfY0 : Error { using Error::Error; };

// asymptotics
struct ZeroCoefficient : Error { using Error::Error; };
struct NoInteriorMinimum : Error { using Error::Error; };
struct RankDeficient : Error { using Error::Error; };

}  // namespace canard
