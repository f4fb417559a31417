#pragma once

#include <stdexcept>
#include <string>

namespace pzeta {

// Argument outside the mathematical domain of an operation (poles, branch
// cuts, divergent sums, sieve range). The CLI maps this to exit code 2.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed decimal literal or data file line.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requested order exceeds what the bundled data or engine supports.
class UnsupportedOrder : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace pzeta
