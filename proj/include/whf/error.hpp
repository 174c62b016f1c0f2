#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace whf {

enum class ErrorCode {
    InvalidArgument,
    ParseError,
    PoleAtPoint,
    JumpWithoutSide,
    UnboundedAtInfinity,
    NotElliptic,
    RegularityViolated,
    UnsupportedP,
    CurveThroughOrigin,
    ZeroLimit,
    NotInvertibleSymbol,
    WrongGridKind,
    NotPlusFunction,
    NotIdempotent,
    NotCanonical,
    IllConditioned,
    LambdaOnSpectrum,
    LambdaIsPlusMinusOne,
    WrongAlphaRegime,
    ResidualTooLarge,
    SingularAtBoundary,
    TruncationViolated,
    IoError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

} // namespace whf
