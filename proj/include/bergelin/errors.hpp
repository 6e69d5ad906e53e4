#pragma once

#include <stdexcept>
#include <string>

namespace bergelin {

enum class ErrorCode {
    NonUniformEdge,
    LinearityViolation,
    DuplicateEdge,
    VertexOutOfRange,
    SameVertex,
    EmptySet,
    NotAdjacent,
    InvalidT,
    InvalidParams,
    HypothesisUnmet,
    StabilityViolation,
    DimensionMismatch,
    NotConnected,
    NoConvergence,
    DivisibilityViolated,
    NotEnoughColorEdges,
    NegativeF,
    BudgetExceeded,
    ParseError,
};

const char* to_string(ErrorCode code);

/// Library-wide exception. Carries a machine-readable code plus a message;
/// some sites attach a payload (JSON dump, best-so-far bounds) for reporting.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    Error(ErrorCode code, const std::string& message, std::string payload)
        : std::runtime_error(std::string(to_string(code)) + ": " + message),
          code_(code),
          payload_(std::move(payload)) {}

    ErrorCode code() const noexcept { return code_; }

    /// Structured extra data (JSON text); empty when the site has none.
    const std::string& payload() const noexcept { return payload_; }

private:
    ErrorCode code_;
    std::string payload_;
};

}  // namespace bergelin
