#pragma once

#include <stdexcept>
#include <string>

namespace sr {

// Stable error codes; every failure thrown by the library carries one.
enum class ErrorCode {
    VertexOutOfRange,
    EmptyFacetList,
    FaceNotInComplex,
    DualUndefined,
    SizeCapExceeded,
    NoGenerators,
    NotBuchsbaum,
    ParameterRange,
    DegenerateDegrees,
    PreconditionFailed,
    GenericityExhausted,
    NotNested,
    TargetOutOfRange,
    ParseError,
    VerificationFailed,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace sr
