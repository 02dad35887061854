#ifndef ESALG_ERRORS_HPP
#define ESALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace esalg {

enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  DimensionMismatch,
  NotSquare,
  Singular,
  DoesNotSplit,
  InvalidDescriptor,
  NotExtraSpecial,
  DegenerateVector,
  UnpairedEigenvalue,
  IdentityViolated,
  StemFailure,
  NotAssociative,
  NotDiassociative,
  ParseError,
  UnsupportedField,
  InvariantFailure,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Process exit code used by the command line tool.
///   2 = bad input, 3 = unsupported (non-splitting cosquare), 4 = internal invariant failure.
int exit_code(ErrorKind kind);

}  // namespace esalg

#endif  // ESALG_ERRORS_HPP
