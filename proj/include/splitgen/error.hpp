#pragma once

#include <stdexcept>
#include <string>

namespace splitgen {

/// Raised when an engine operation cannot produce a correct answer: invariant
/// violations, unsupported inputs, exceeded caps, incomplete factorizations.
class EngineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for malformed textual or JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace splitgen
