#pragma once

#include <stdexcept>
#include <string>

namespace realgw {

/// Raised when an operation is called outside its stated precondition.
/// The message names the violated condition.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

namespace detail {

inline void require(bool condition, const char* message) {
  if (!condition) throw DomainError(message);
}

inline void require(bool condition, const std::string& message) {
  if (!condition) throw DomainError(message);
}

}  // namespace detail
}  // namespace realgw
