#pragma once

#include <stdexcept>
#include <string>

namespace qsym {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Matrix dimensions do not fit the operation.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Input is outside the mathematical domain of the operation
// (non-projection, non-bijective map, mismatched index sets, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input: graph specs, permutations, JSON documents.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Vertex id or label that the graph codec does not recognise.
class CodecError : public Error {
 public:
  using Error::Error;
};

// A bounded search ran out of candidates.
class SearchExhausted : public Error {
 public:
  SearchExhausted(const std::string& what, unsigned long long bound)
      : Error(what + " (bound " + std::to_string(bound) + ")"), bound_(bound) {}

  [[nodiscard]] unsigned long long bound() const noexcept { return bound_; }

 private:
  unsigned long long bound_;
};

// Two routes that must agree produced different results.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Exact arithmetic left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace qsym
