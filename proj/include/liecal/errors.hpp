#ifndef LIECAL_ERRORS_HPP
#define LIECAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liecal {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// sl2 / decomposition
struct ArgumentOrder : Error { using Error::Error; };
struct NonClosedAction : Error { using Error::Error; };
struct DecompositionResidual : Error { using Error::Error; };
struct NoRealForm : Error { using Error::Error; };

// matrix algebras
struct UnsupportedParam : Error { using Error::Error; };
struct UnsupportedFamily : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct NotSkew : Error { using Error::Error; };
struct UnsupportedDim : Error { using Error::Error; };
struct WrongFamily : Error { using Error::Error; };

// principal / spin structures
struct NotApplicable : Error { using Error::Error; };
struct MismatchError : Error { using Error::Error; };

// invariant forms
struct ArityMismatch : Error { using Error::Error; };
struct DegreeTooLarge : Error { using Error::Error; };
struct ZeroVector : Error { using Error::Error; };

// grassmannian
struct DegreeMismatch : Error { using Error::Error; };
struct NotCritical : Error { using Error::Error; };

// resultants
struct EvenDegree : Error { using Error::Error; };
struct WrongParity : Error { using Error::Error; };
struct DegenerateSample : Error { using Error::Error; };

}  // namespace liecal

#endif
