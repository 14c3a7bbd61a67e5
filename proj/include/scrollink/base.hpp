#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace scrollink {

// All exact quantities in the library live in signed 64-bit range.  The
// intended inputs (splitting degrees, curve degrees, genus bounds) are desk
// scale, far away from the edges of that range.
using Int = std::int64_t;

/// A violated precondition on otherwise well-formed input.  `precondition()`
/// names the violated clause so callers can report it without parsing the
/// message text.
class domain_error : public std::invalid_argument {
public:
  domain_error(std::string precondition, const std::string& message)
      : std::invalid_argument(message + " [precondition: " + precondition + "]"),
        precondition_(std::move(precondition)) {}

  const std::string& precondition() const noexcept { return precondition_; }

private:
  std::string precondition_;
};

/// An identity that must hold by construction failed.  This signals a defect
/// in the library (or arithmetic outside the exact range), never bad input.
class consistency_error : public std::logic_error {
public:
  explicit consistency_error(const std::string& message) : std::logic_error(message) {}
};

inline void require(bool condition, const char* precondition, const std::string& message) {
  if (!condition) throw domain_error(precondition, message);
}

inline void ensure(bool condition, const std::string& message) {
  if (!condition) throw consistency_error(message);
}

}  // namespace scrollink
