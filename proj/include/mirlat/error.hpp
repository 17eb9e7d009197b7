#ifndef MIRLAT_ERROR_HPP_
#define MIRLAT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace mirlat {

enum class ErrorKind {
  DimensionMismatch,
  ArityMismatch,
  InvalidDescriptor,
  InvalidArgument,
  NonIntegral,
  Overflow,
  Consistency,   // an internal cross-check between two routes disagreed
  Parse,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so that callers (the CLI,
// the verify harness) can map it onto exit codes and report records.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }
private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

} // namespace mirlat

#endif
