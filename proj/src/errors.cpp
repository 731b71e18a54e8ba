#include "girthlab/errors.hpp"

namespace girthlab {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::Digon: return "Digon";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorCode::DigonOffsetPair: return "DigonOffsetPair";
        case ErrorCode::InfeasibleDegree: return "InfeasibleDegree";
        case ErrorCode::BadArgument: return "BadArgument";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::NotOutregular: return "NotOutregular";
        case ErrorCode::NotMFree: return "NotMFree";
        case ErrorCode::GammaZero: return "GammaZero";
        case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
        case ErrorCode::GridTooCoarse: return "GridTooCoarse";
        case ErrorCode::HypothesisViolated: return "HypothesisViolated";
        case ErrorCode::InternalContradiction: return "InternalContradiction";
    }
    return "Unknown";
}

} // namespace girthlab
