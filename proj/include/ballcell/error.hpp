#pragma once

#include <stdexcept>
#include <string>

namespace ballcell {

enum class ErrorKind {
  kDivisionByZero,
  kPole,
  kDomain,      // argument outside the operation's range
  kDivergent,   // n = 1 with r >= 2: the game never terminates
  kBudget,      // enumeration / compute budget exceeded
  kMismatch,    // inputs describe different configurations
  kParse,
};

const char* ToString(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline void Require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) throw Error(kind, message);
}

}  // namespace ballcell
