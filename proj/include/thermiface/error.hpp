#pragma once

#include <stdexcept>
#include <string>

namespace thermiface {

enum class ErrorKind {
    Validation,
    EqualConductivities,
    InfeasibleMeasurement,
    NoiseSwampsSignal,
    AtAsymptote,
    AllSamplesInfeasible,
    OutOfDomain,
    NotFound,
    Parse,
    Io,
    Internal,
};

const char* to_string(ErrorKind kind) noexcept;

// Every failure raised by the library is an Error; kind() is what callers
// (the CLI in particular) branch on.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace thermiface
