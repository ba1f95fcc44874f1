#pragma once

#include <stdexcept>
#include <string>

namespace kdyck {

// Malformed path text or tuple payload.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by the exhaustive oracles when a request exceeds the step limit.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kdyck
