#pragma once

#include <stdexcept>
#include <string>

namespace tprop {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define TPROP_DEFINE_ERROR(Name)                  \
    class Name : public Error {                   \
    public:                                       \
        using Error::Error;                       \
    };

TPROP_DEFINE_ERROR(EvalError)           // function handle not evaluable at a required point
TPROP_DEFINE_ERROR(ZeroField)           // |B| = 0 where a field axis is required
TPROP_DEFINE_ERROR(ZeroCharge)
TPROP_DEFINE_ERROR(NoLimit)             // drag-free motion has no stationary velocity
TPROP_DEFINE_ERROR(NonFiniteState)
TPROP_DEFINE_ERROR(GridMismatch)
TPROP_DEFINE_ERROR(QuadratureFailure)
TPROP_DEFINE_ERROR(NotConverged)
TPROP_DEFINE_ERROR(NotPerpendicular)
TPROP_DEFINE_ERROR(NonCommuting)
TPROP_DEFINE_ERROR(OverflowError)
TPROP_DEFINE_ERROR(TruncationWarning)   // dropped harmonic tail exceeds the accuracy budget
TPROP_DEFINE_ERROR(DegenerateGeometry)

#undef TPROP_DEFINE_ERROR

}  // namespace tprop
