#pragma once

#include <stdexcept>
#include <string>

namespace secz {

enum class ErrorKind {
  domain,       // argument outside the operation's domain
  pole,         // evaluation at a pole
  precision,    // required precision exceeds a cap, or digits were consumed
  convergence,  // an iterative scheme failed to settle
  truncation,   // a truncation diagnostic exceeds the requested tolerance
  parse,        // malformed input text
  io,           // file access
  data,         // semantically invalid data (ordering, missing entries)
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace secz
