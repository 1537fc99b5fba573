#pragma once

#include <stdexcept>
#include <string>

namespace mspec {

// Input-side failures: the data never made it into a valid structure.
// These map to CLI exit code 2, while law/property violations (reported as
// values, or as ValidatorError during parsing) map to exit code 1.
enum class ErrorKind {
  Schema,          // malformed file or table shape
  UnknownElement,  // name not in the declared carrier
  Cap,             // size cap exceeded
  Usage,           // bad arguments / unsatisfied precondition
};

class InputError : public std::runtime_error {
 public:
  InputError(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind(kind) {}

  ErrorKind kind;
};

// A structure parsed fine but violates one of its defining laws
// (join-semilattice laws, closure laws, intersection-closure).
class ValidatorError : public std::runtime_error {
 public:
  explicit ValidatorError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace mspec
