#ifndef DYNCENT_ERRORS_HPP
#define DYNCENT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dyncent {

// Malformed or inconsistent input data (bad records, unknown nodes,
// missing timestamps). CLI maps this to exit code 2.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure: non-convergence, overflow to infinity.
// CLI maps this to exit code 3.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid parameters and usage errors raise std::invalid_argument
// (CLI maps those to exit code 1).

}  // namespace dyncent

#endif  // DYNCENT_ERRORS_HPP
