#pragma once

#include <stdexcept>
#include <string>

namespace fwid {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  /// Short machine-readable tag used in verification reports.
  virtual const char* tag() const noexcept { return "Error"; }
};

#define FWID_DEFINE_ERROR(Name)                                      \
  class Name : public Error {                                        \
   public:                                                           \
    using Error::Error;                                              \
    const char* tag() const noexcept override { return #Name; }     \
  }

FWID_DEFINE_ERROR(PoleError);
FWID_DEFINE_ERROR(DenominatorZeroError);
FWID_DEFINE_ERROR(NotSummableError);
FWID_DEFINE_ERROR(TailNotConverged);
FWID_DEFINE_ERROR(DegenerateContextError);
FWID_DEFINE_ERROR(ConstraintViolation);
FWID_DEFINE_ERROR(EvaluationError);
FWID_DEFINE_ERROR(SemanticError);
FWID_DEFINE_ERROR(SamplingExhausted);
FWID_DEFINE_ERROR(UnknownIdentity);
FWID_DEFINE_ERROR(IoError);

#undef FWID_DEFINE_ERROR

/// Raised when a gamma numerator argument sits on a pole.
class NumeratorPoleError : public PoleError {
 public:
  NumeratorPoleError(std::size_t index, double re, double im)
      : PoleError("numerator gamma argument #" + std::to_string(index) + " (" +
                  std::to_string(re) + (im < 0 ? "-" : "+") + std::to_string(im < 0 ? -im : im) +
                  "i) is a pole"),
        index_(index) {}
  const char* tag() const noexcept override { return "NumeratorPoleError"; }
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace fwid
