#pragma once

#include <stdexcept>
#include <string>

namespace modlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define MODLAB_ERROR(Name)                       \
  struct Name : Error {                          \
    using Error::Error;                          \
  };

MODLAB_ERROR(NotHermitian)
MODLAB_ERROR(NotPSD)
MODLAB_ERROR(NumericalFailure)
MODLAB_ERROR(AlgebraMismatch)
MODLAB_ERROR(NotCompressed)
MODLAB_ERROR(OutOfStrip)
MODLAB_ERROR(GridMismatch)
MODLAB_ERROR(ReferenceMismatch)
MODLAB_ERROR(NotFaithful)
MODLAB_ERROR(PoleHit)
MODLAB_ERROR(PoleOnBoundary)
MODLAB_ERROR(NotSquareIntegrable)
MODLAB_ERROR(UnsupportedForm)
MODLAB_ERROR(NotInN)
MODLAB_ERROR(NotIntegrable)
MODLAB_ERROR(DivergentTrace)
MODLAB_ERROR(ConfigInvalid)
MODLAB_ERROR(IoFailure)

#undef MODLAB_ERROR

}  // namespace modlab
