#pragma once

#include <stdexcept>
#include <string>

namespace tabkit {

enum class ErrorKind {
  DuplicateLabel,
  ShapeMismatch,
  RectangleTooSmall,
  InverseMismatch,
  NotLR,
  NotHorizontalStrip,
  AlphabetMismatch,
  StabilityViolation,
  MalformedPrefix,
  InvalidTableau,
  Usage,
  Invariant,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Throws Invariant; used where a theorem guarantees the condition.
inline void ensure(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::Invariant, what);
}

}  // namespace tabkit
