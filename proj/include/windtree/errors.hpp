#pragma once

#include <stdexcept>
#include <string>

namespace windtree {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidParameter : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct NotHyperbolic : Error { using Error::Error; };
struct NotNormal : Error { using Error::Error; };
struct NotFound : Error { using Error::Error; };
struct NotInvariant : Error { using Error::Error; };
struct EmptyStage : Error { using Error::Error; };
struct SharedFixedPoint : Error { using Error::Error; };
struct EllipticInput : Error { using Error::Error; };
struct CornerHit : Error { using Error::Error; };
struct NonUnitDirection : Error { using Error::Error; };
struct InsufficientData : Error { using Error::Error; };
struct MissingArtifact : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };

}  // namespace windtree
