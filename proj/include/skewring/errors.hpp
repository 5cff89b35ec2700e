#ifndef SKEWRING_ERRORS_HPP
#define SKEWRING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace skewring {

/// Base of every exception thrown by the library. `kind()` is a stable,
/// machine-friendly name ("NotInvertible", "BudgetExceeded", ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept = 0;
};

/// A mathematically impossible request on well-formed input.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input: bad modulus, bad literal, values from different contexts.
class UsageError : public Error {
 public:
  using Error::Error;
};

#define SKEWRING_DEFINE_ERROR(Name, Base)                                  \
  class Name : public Base {                                               \
   public:                                                                 \
    using Base::Base;                                                      \
    const char* kind() const noexcept override { return #Name; }           \
  };

SKEWRING_DEFINE_ERROR(NotInvertible, DomainError)
SKEWRING_DEFINE_ERROR(NotDivisible, DomainError)
SKEWRING_DEFINE_ERROR(NotRightDivisor, DomainError)
SKEWRING_DEFINE_ERROR(NonMonicGenerator, DomainError)
SKEWRING_DEFINE_ERROR(GeneratorDegreeTooLarge, DomainError)
SKEWRING_DEFINE_ERROR(OrderMismatch, DomainError)
SKEWRING_DEFINE_ERROR(MessageTooLong, DomainError)
SKEWRING_DEFINE_ERROR(BudgetExceeded, DomainError)
// Raised when an internal cross-check disagrees; indicates a bug in this
// library rather than bad input.
SKEWRING_DEFINE_ERROR(InternalMismatch, DomainError)

SKEWRING_DEFINE_ERROR(InvalidModulus, UsageError)
SKEWRING_DEFINE_ERROR(ModulusMismatch, UsageError)
SKEWRING_DEFINE_ERROR(ContextMismatch, UsageError)
SKEWRING_DEFINE_ERROR(InvalidAutomorphismId, UsageError)
SKEWRING_DEFINE_ERROR(LengthMismatch, UsageError)
SKEWRING_DEFINE_ERROR(ParseError, UsageError)

#undef SKEWRING_DEFINE_ERROR

}  // namespace skewring

#endif  // SKEWRING_ERRORS_HPP
