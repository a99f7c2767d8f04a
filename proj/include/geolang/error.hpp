// Error kinds shared by every module. Each kind maps to a distinct process
// exit code in the command-line tool.

#ifndef GEOLANG_ERROR_HPP_
#define GEOLANG_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace geolang {

enum class ErrorKind {
  UnknownSymbol = 3,
  BudgetExceeded = 4,
  InconsistentLocality = 5,
  BoundTooSmall = 6,
  NoRecurrence = 7,
  NoConvergence = 8,
  AlphabetMismatch = 9,
  NondeterministicInput = 10,
  NotTrimmed = 11,
  NotGeodesic = 12,
  FilterRejected = 13,
  EndpointMismatch = 14,
  EmptyWord = 15,
  PrefixTooShort = 16,
  NotAccepted = 17,
  UnknownScenario = 18,
  NonStabilization = 19,
  InvalidInput = 20,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  int exit_code() const noexcept { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace geolang

#endif  // GEOLANG_ERROR_HPP_
