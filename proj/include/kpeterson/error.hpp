#pragma once

#include <stdexcept>
#include <string>

namespace kpeterson {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

#define KPETERSON_DEFINE_ERROR(Name)                              \
  class Name : public Error {                                     \
   public:                                                        \
    using Error::Error;                                           \
    const char* kind() const noexcept override { return #Name; } \
  }

KPETERSON_DEFINE_ERROR(UnsupportedType);
KPETERSON_DEFINE_ERROR(InvalidCartanMatrix);
KPETERSON_DEFINE_ERROR(RankMismatch);
KPETERSON_DEFINE_ERROR(IndexOutOfRange);
KPETERSON_DEFINE_ERROR(NonPolynomial);
KPETERSON_DEFINE_ERROR(NotInvertible);
KPETERSON_DEFINE_ERROR(BasisMismatch);
KPETERSON_DEFINE_ERROR(ShapeViolation);
KPETERSON_DEFINE_ERROR(SingularSystem);
KPETERSON_DEFINE_ERROR(MalformedDatum);
KPETERSON_DEFINE_ERROR(ValidationError);
KPETERSON_DEFINE_ERROR(LengthGuard);

#undef KPETERSON_DEFINE_ERROR

/// Parse failure with the byte offset of the offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  const char* kind() const noexcept override { return "ParseError"; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace kpeterson
