#pragma once

#include <stdexcept>
#include <string>

namespace luka {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// paths
struct StepOutOfRange : Error { using Error::Error; };
struct NegativeHeight : Error { using Error::Error; };
struct NonzeroFinalHeight : Error { using Error::Error; };
struct ResourceLimit : Error { using Error::Error; };

// exactalg
struct VariableMismatch : Error { using Error::Error; };
struct ZeroPolynomial : Error { using Error::Error; };
struct DegenerateMap : Error { using Error::Error; };
struct NoPositiveRoot : Error { using Error::Error; };
struct MultipleSignChanges : Error { using Error::Error; };

// genfun / phase
struct InfiniteEll : Error { using Error::Error; };
struct DegenerateModel : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };

// bijections
struct WrongModel : Error { using Error::Error; };
struct RiseRestrictionViolated : Error { using Error::Error; };
struct NotAJumpStep : Error { using Error::Error; };

}  // namespace luka
