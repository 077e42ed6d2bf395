#pragma once

#include <stdexcept>
#include <string>

namespace gcsim {

/// Raised when a caller violates an operation's precondition.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Raised when a connected site network cannot be drawn within the retry bound.
class NetworkGenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message) {
    if (!condition) throw ContractError(message);
}

}  // namespace gcsim
