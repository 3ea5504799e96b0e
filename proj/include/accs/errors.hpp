#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace accs {

/// Thrown when an objective returns a non-finite value; carries the position
/// that triggered it so callers can diagnose the failing input.
class EvaluationError : public std::runtime_error {
public:
    EvaluationError(const std::string& message, std::vector<double> position)
        : std::runtime_error(message), position_(std::move(position)) {}

    const std::vector<double>& position() const noexcept { return position_; }

private:
    std::vector<double> position_;
};

} // namespace accs
