#pragma once

#include <stdexcept>
#include <string>

namespace lienil {

// Error categories map 1:1 onto the C API / CLI exit codes.
enum class ErrorKind {
  Parse,     // malformed spec, unknown family, bad JSON
  Cap,       // closure or enumeration exceeds a configured resource cap
  Range,     // direct oracle requested outside its range
  Invalid,   // bad arguments (non-invertible generator, nonabelian subgroup, ...)
  Gate,      // KG is not Lie nilpotent, Lie-index operation refused
  Internal,  // consistency failure that signals an engine bug
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string msg)
      : std::runtime_error(std::move(msg)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) {
  throw Error(k, msg);
}

}  // namespace lienil
