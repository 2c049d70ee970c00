#pragma once

#include <stdexcept>
#include <string>

namespace toruschar {

/// Base of every error thrown by the library. `code()` is a stable
/// machine-readable identifier used by the CLI's JSON error output.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define TORUSCHAR_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& what) : Error(#Name, what) {}    \
  };

TORUSCHAR_DEFINE_ERROR(InvalidKnotParams)
TORUSCHAR_DEFINE_ERROR(UnknotRejected)
TORUSCHAR_DEFINE_ERROR(UnsupportedRank)
TORUSCHAR_DEFINE_ERROR(InvalidLabel)
TORUSCHAR_DEFINE_ERROR(BudgetExceeded)
TORUSCHAR_DEFINE_ERROR(NonIntegralSolution)
TORUSCHAR_DEFINE_ERROR(NoValidFactorization)
TORUSCHAR_DEFINE_ERROR(InvalidK)
TORUSCHAR_DEFINE_ERROR(NegativeMultiplicity)
TORUSCHAR_DEFINE_ERROR(SingularM)
TORUSCHAR_DEFINE_ERROR(DegenerateSample)
TORUSCHAR_DEFINE_ERROR(InvalidWord)
TORUSCHAR_DEFINE_ERROR(InternalError)

#undef TORUSCHAR_DEFINE_ERROR

}  // namespace toruschar
