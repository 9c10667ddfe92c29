#pragma once

#include <stdexcept>
#include <string>

namespace boxlab {

// Common base so callers can catch any library error uniformly.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define BOXLAB_DEFINE_ERROR(Name)                                        \
  struct Name : Error {                                                  \
    explicit Name(const std::string& m) : Error(std::string(#Name ": ") + m) {} \
  }

BOXLAB_DEFINE_ERROR(InvalidShape);        // inconsistent or non-positive box data
BOXLAB_DEFINE_ERROR(BudgetExceeded);      // enumeration/sample budget overrun
BOXLAB_DEFINE_ERROR(InsufficientRange);   // input sequence does not cover a request
BOXLAB_DEFINE_ERROR(QuadratureFailure);   // adaptive integration failed to certify
BOXLAB_DEFINE_ERROR(TruncationOverflow);  // basis expansion exceeded its degree cap
BOXLAB_DEFINE_ERROR(NearSingularC);       // matrix too close to upper-triangular for the integral path
BOXLAB_DEFINE_ERROR(DimensionMismatch);   // operand dimensions disagree
BOXLAB_DEFINE_ERROR(PrecisionExhausted);  // working precision cannot support the request
BOXLAB_DEFINE_ERROR(ConfigInvalid);       // malformed or out-of-range configuration
BOXLAB_DEFINE_ERROR(ReductionDiverged);   // fundamental-domain reduction hit its iteration cap
BOXLAB_DEFINE_ERROR(EmptyLedger);         // report requested from an empty run ledger
BOXLAB_DEFINE_ERROR(NonCertifiableTail);  // no certified tail bound available
BOXLAB_DEFINE_ERROR(PreconditionViolated);// documented precondition does not hold
BOXLAB_DEFINE_ERROR(FloorViolation);      // coordinate below the fast-path floor

#undef BOXLAB_DEFINE_ERROR

}  // namespace boxlab
