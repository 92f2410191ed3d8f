#pragma once

#include <stdexcept>
#include <string>

namespace honeycomb {

// Malformed input text: generator words, config documents, serialized colorings.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an operation does not hold (odd modulus,
// J not inside H, stabilizer not contained in J, invalid merge, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A structural check that should hold by construction failed.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace honeycomb
