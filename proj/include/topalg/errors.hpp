#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace topalg {

// All domain-level failures carry a stable machine-readable kind
// ("DuplicateLabel", "TransitivityBroken", ...).  The CLI maps kinds to exit
// codes; tests match on the kind rather than the message text.
class DomainError : public std::runtime_error {
public:
  DomainError(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

// Malformed input text / JSON.  Kept separate from DomainError because the
// CLI exit-code contract distinguishes parse failures from domain failures.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& msg)
      : std::runtime_error("parse error: " + msg) {}
};

inline DomainError size_limit_error(const std::string& msg) {
  return DomainError("SizeLimitExceeded", msg);
}

}  // namespace topalg
