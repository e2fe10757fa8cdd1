#pragma once

#include <stdexcept>
#include <string>

namespace polyeig {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define POLYEIG_DEFINE_ERROR(Name)            \
  class Name : public Error {                 \
   public:                                    \
    using Error::Error;                       \
  }

POLYEIG_DEFINE_ERROR(SingularMatrix);
POLYEIG_DEFINE_ERROR(ConvergenceFailure);
POLYEIG_DEFINE_ERROR(ZeroPolynomial);
POLYEIG_DEFINE_ERROR(DegenerateInput);
POLYEIG_DEFINE_ERROR(EmptyVertexSet);
POLYEIG_DEFINE_ERROR(BadInput);
POLYEIG_DEFINE_ERROR(NoBounds);
POLYEIG_DEFINE_ERROR(DomainError);
POLYEIG_DEFINE_ERROR(CollisionError);
POLYEIG_DEFINE_ERROR(SingularLeading);
POLYEIG_DEFINE_ERROR(QRNoConvergence);
POLYEIG_DEFINE_ERROR(SizeLimit);

#undef POLYEIG_DEFINE_ERROR

/// Malformed polynomial file; carries the 1-based line number (0 if unknown).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace polyeig
