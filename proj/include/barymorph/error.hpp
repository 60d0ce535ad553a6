#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace barymorph {

enum class ErrorKind {
    // plane_graph
    NotTriangulated,
    EulerViolation,
    InconsistentEmbedding,
    NonSimple,
    DegreeTooLow,
    UnknownVertex,
    // geometry
    DegenerateDrawing,
    DegenerateTriangle,
    WitnessNotFound,
    // coefficients
    InvalidCoefficients,
    GraphMismatch,
    NonStarShaped,
    // embedder
    SingularSystem,
    ResidualTooLarge,
    // morph
    StepStalled,
    PlanarityViolation,
    OuterMismatch,
    // families
    ParameterOutOfRange,
    // text formats
    ParseError,
};

[[nodiscard]] constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NotTriangulated: return "NotTriangulated";
        case ErrorKind::EulerViolation: return "EulerViolation";
        case ErrorKind::InconsistentEmbedding: return "InconsistentEmbedding";
        case ErrorKind::NonSimple: return "NonSimple";
        case ErrorKind::DegreeTooLow: return "DegreeTooLow";
        case ErrorKind::UnknownVertex: return "UnknownVertex";
        case ErrorKind::DegenerateDrawing: return "DegenerateDrawing";
        case ErrorKind::DegenerateTriangle: return "DegenerateTriangle";
        case ErrorKind::WitnessNotFound: return "WitnessNotFound";
        case ErrorKind::InvalidCoefficients: return "InvalidCoefficients";
        case ErrorKind::GraphMismatch: return "GraphMismatch";
        case ErrorKind::NonStarShaped: return "NonStarShaped";
        case ErrorKind::SingularSystem: return "SingularSystem";
        case ErrorKind::ResidualTooLarge: return "ResidualTooLarge";
        case ErrorKind::StepStalled: return "StepStalled";
        case ErrorKind::PlanarityViolation: return "PlanarityViolation";
        case ErrorKind::OuterMismatch: return "OuterMismatch";
        case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries the violated invariant as a
/// kind, so callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace barymorph
