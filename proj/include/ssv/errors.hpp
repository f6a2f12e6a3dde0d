#pragma once

#include <stdexcept>
#include <string>

namespace ssv {

/// Base class of every error raised by the library. The CLI maps these to
/// exit status 1 (domain failure) except ParseError, ParamError and
/// InputError, which are usage errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* kind() const noexcept { return "Error"; }
};

#define SSV_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                   \
   public:                                                      \
    explicit Name(const std::string& what) : Error(what) {}     \
    const char* kind() const noexcept override { return #Name; } \
  };

SSV_DEFINE_ERROR(ContainmentError)
SSV_DEFINE_ERROR(DimensionError)
SSV_DEFINE_ERROR(NotPointedError)
SSV_DEFINE_ERROR(RankError)
SSV_DEFINE_ERROR(NotDominantError)
SSV_DEFINE_ERROR(ValidationError)
SSV_DEFINE_ERROR(OutsideSupportError)
SSV_DEFINE_ERROR(ParamError)
SSV_DEFINE_ERROR(MissingAutError)
SSV_DEFINE_ERROR(IncompatibleRestrictionError)
SSV_DEFINE_ERROR(DomainError)
SSV_DEFINE_ERROR(DegenerateLiftError)
SSV_DEFINE_ERROR(NotReducedError)
SSV_DEFINE_ERROR(InvalidRankDataError)
SSV_DEFINE_ERROR(NonLatticeError)
SSV_DEFINE_ERROR(SearchBudgetError)
// Malformed input documents or arguments; the CLI maps this to exit 2.
SSV_DEFINE_ERROR(ParseError)
// Unreadable or unwritable files.
SSV_DEFINE_ERROR(InputError)

#undef SSV_DEFINE_ERROR

}  // namespace ssv
