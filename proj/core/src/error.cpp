#include "sr/error.hpp"

namespace sr {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::EmptyFacetList: return "EmptyFacetList";
    case ErrorCode::FaceNotInComplex: return "FaceNotInComplex";
    case ErrorCode::DualUndefined: return "DualUndefined";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::NoGenerators: return "NoGenerators";
    case ErrorCode::NotBuchsbaum: return "NotBuchsbaum";
    case ErrorCode::ParameterRange: return "ParameterRange";
    case ErrorCode::DegenerateDegrees: return "DegenerateDegrees";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::GenericityExhausted: return "GenericityExhausted";
    case ErrorCode::NotNested: return "NotNested";
    case ErrorCode::TargetOutOfRange: return "TargetOutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    }
    return "UnknownError";
}

} // namespace sr
