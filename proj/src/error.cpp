#include "whf/error.hpp"

namespace whf {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::PoleAtPoint: return "PoleAtPoint";
    case ErrorCode::JumpWithoutSide: return "JumpWithoutSide";
    case ErrorCode::UnboundedAtInfinity: return "UnboundedAtInfinity";
    case ErrorCode::NotElliptic: return "NotElliptic";
    case ErrorCode::RegularityViolated: return "RegularityViolated";
    case ErrorCode::UnsupportedP: return "UnsupportedP";
    case ErrorCode::CurveThroughOrigin: return "CurveThroughOrigin";
    case ErrorCode::ZeroLimit: return "ZeroLimit";
    case ErrorCode::NotInvertibleSymbol: return "NotInvertibleSymbol";
    case ErrorCode::WrongGridKind: return "WrongGridKind";
    case ErrorCode::NotPlusFunction: return "NotPlusFunction";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::NotCanonical: return "NotCanonical";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::LambdaOnSpectrum: return "LambdaOnSpectrum";
    case ErrorCode::LambdaIsPlusMinusOne: return "LambdaIsPlusMinusOne";
    case ErrorCode::WrongAlphaRegime: return "WrongAlphaRegime";
    case ErrorCode::ResidualTooLarge: return "ResidualTooLarge";
    case ErrorCode::SingularAtBoundary: return "SingularAtBoundary";
    case ErrorCode::TruncationViolated: return "TruncationViolated";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(what), code_(code)
{
}

void fail(ErrorCode code, const std::string& what)
{
    throw Error(code, what);
}

} // namespace whf
