#ifndef GIRTHLAB_ERRORS_HPP
#define GIRTHLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace girthlab {

// Machine-readable reason attached to every library exception.
enum class ErrorCode {
    SelfLoop,
    Digon,
    DuplicateEdge,
    VertexOutOfRange,
    DigonOffsetPair,
    InfeasibleDegree,
    BadArgument,
    ParseError,
    TooLarge,
    NotOutregular,
    NotMFree,
    GammaZero,
    DegenerateDenominator,
    GridTooCoarse,
    HypothesisViolated,
    InternalContradiction,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

const char* to_string(ErrorCode code) noexcept;

} // namespace girthlab

#endif
