#ifndef FOURFOLD_ERRORS_HPP
#define FOURFOLD_ERRORS_HPP

#include <stdexcept>

namespace fourfold {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidParameters : Error { using Error::Error; };
struct InconsistentDescriptor : Error { using Error::Error; };
struct EmptyList : Error { using Error::Error; };
struct InsufficientHomology : Error { using Error::Error; };
struct PreconditionFailed : Error { using Error::Error; };
struct NonNegativeLambda : Error { using Error::Error; };
struct UnknownFormulaId : Error { using Error::Error; };
struct InvalidLatticePoint : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace fourfold

#endif
