#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quartsum {

enum class ErrorKind {
  InvalidArgument,
  ParseError,
  DegenerateParameter,
  ZeroX,
  ZeroR,
  TrivialSolution,
  NotASolution,
  ZeroMember,
  SearchLimitExceeded,
};

std::string_view to_string(ErrorKind kind);

// Every failure in the library is reported through this type; callers
// dispatch on kind() rather than on the message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace quartsum
