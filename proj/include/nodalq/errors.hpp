#pragma once

#include <stdexcept>
#include <string>

namespace nodalq {

/// Base class of every error raised by the library. `kind()` is the stable
/// machine-readable error name that also appears in CLI diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define NODALQ_DEFINE_ERROR(Name)                                     \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& what) : Error(#Name, what) {}    \
  }

NODALQ_DEFINE_ERROR(ParseError);
NODALQ_DEFINE_ERROR(InvalidArgument);
NODALQ_DEFINE_ERROR(ZeroPolynomial);
NODALQ_DEFINE_ERROR(DuplicateNode);
NODALQ_DEFINE_ERROR(NotANode);
NODALQ_DEFINE_ERROR(OutOfRange);
NODALQ_DEFINE_ERROR(DegeneratePairing);
NODALQ_DEFINE_ERROR(DimensionMismatch);
NODALQ_DEFINE_ERROR(NotAComplex);
NODALQ_DEFINE_ERROR(NotSplit);
NODALQ_DEFINE_ERROR(RepeatedRoot);
NODALQ_DEFINE_ERROR(CertificationFailure);
NODALQ_DEFINE_ERROR(InternalError);

#undef NODALQ_DEFINE_ERROR

}  // namespace nodalq
