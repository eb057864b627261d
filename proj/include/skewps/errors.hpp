#pragma once

#include <stdexcept>
#include <string>

namespace skewps {

/// Base of every error raised by the kernel. `name()` is the stable error
/// identifier printed by the CLI on standard error.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Usage and literal-grammar problems. The CLI maps these to exit code 2.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("ParseError", what) {}
};

class UnknownSuite : public Error {
 public:
  explicit UnknownSuite(const std::string& what) : Error("UnknownSuite", what) {}
};

#define SKEWPS_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  };

SKEWPS_DEFINE_ERROR(DescriptorMismatch)
SKEWPS_DEFINE_ERROR(NotAUnit)
SKEWPS_DEFINE_ERROR(NoUniformiser)
SKEWPS_DEFINE_ERROR(ShapeMismatch)
SKEWPS_DEFINE_ERROR(TwistMismatch)
SKEWPS_DEFINE_ERROR(ValueTooLow)
SKEWPS_DEFINE_ERROR(HypothesisViolated)
SKEWPS_DEFINE_ERROR(OrbitNotClosed)
SKEWPS_DEFINE_ERROR(NotInvertible)
SKEWPS_DEFINE_ERROR(NotCompatible)
SKEWPS_DEFINE_ERROR(NotSolvable)
SKEWPS_DEFINE_ERROR(InsufficientPrecision)
SKEWPS_DEFINE_ERROR(ReducedDegreeTooHigh)

#undef SKEWPS_DEFINE_ERROR

}  // namespace skewps
