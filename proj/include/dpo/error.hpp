#pragma once

#include <stdexcept>
#include <string>

namespace dpo {

enum class ErrorKind {
  DuplicateVertex,
  DuplicateId,
  DuplicatePoint,
  EqualPoints,
  SingletonEdge,
  UnknownVertex,
  BadParameter,
  NotContiguous,
  TooLarge,
  InvalidInput,
};

/// All library failures carry a kind so callers can map them to exit codes
/// or branch without parsing message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace dpo
