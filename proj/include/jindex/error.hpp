#pragma once

#include <stdexcept>
#include <string>

namespace jindex {

/// Raised when input data violates a precondition (bad records, undefined
/// indicators, malformed files). The CLI maps this to exit status 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for caller mistakes that are not about the data itself, such as an
/// unknown index name or report format. The CLI maps this to exit status 1.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace jindex
