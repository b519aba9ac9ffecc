#ifndef RECIP_ERRORS_HPP
#define RECIP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace recip {

// Invalid value for an operation (zero where an inverse is needed, etc).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Work or memory budget exceeded; the message suggests an alternative.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input violates the hypothesis of the statement being exercised.
struct HypothesisError : std::runtime_error {
    explicit HypothesisError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed configuration (CLI / sweep grids).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace recip

#endif
