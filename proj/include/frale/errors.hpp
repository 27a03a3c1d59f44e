#pragma once

#include <stdexcept>
#include <string>

namespace frale {

/// Thrown when a numerical routine cannot reach its accuracy contract
/// (series truncation cap hit, quadrature error estimate above tolerance).
/// Carries the best partial result so callers can inspect it.
class accuracy_error : public std::runtime_error {
public:
    accuracy_error(const std::string& what, double partial)
        : std::runtime_error(what + " (partial result " + std::to_string(partial) + ")"),
          partial_(partial) {}

    double partial() const noexcept { return partial_; }

private:
    double partial_;
};

} // namespace frale
