#pragma once

#include <stdexcept>
#include <string>

namespace posmon {

// Every precondition violation and unrecoverable input defect maps to one of
// these codes. "Unknown" outcomes of searches are ordinary return values, not
// errors.
enum class ErrorCode {
    ZeroDenominator,
    NegativeValue,
    ZeroPolynomial,
    NoRootInInterval,
    MultipleRootsInInterval,
    ReducibleByRationalRoot,
    NonPositiveEnclosure,
    TranscendentalInput,
    EnclosureBudgetExhausted,
    InvalidBudget,
    ValueNotInUnitInterval,
    CapRequired,
    DimensionMismatch,
    NonPositiveGenerator,
    EmptyGeneratorList,
    DenominatorOutsideScheme,
    NotInMonoid,
    NotAMember,
    EmptyPartList,
    ContradictoryVerdicts,
    InvalidArgument,
    ParseError,
    UnsupportedOperation,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace posmon
