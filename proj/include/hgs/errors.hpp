#pragma once

#include <stdexcept>
#include <string>

namespace hgs {

/// Base class for all domain errors. `name()` is the stable machine-readable
/// identifier that the CLI prints alongside the message.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define HGS_DEFINE_ERROR(Type)                                   \
  class Type : public Error {                                    \
   public:                                                       \
    explicit Type(const std::string& message) : Error(#Type, message) {} \
  };

HGS_DEFINE_ERROR(InvalidArgument)
HGS_DEFINE_ERROR(NotOddPrime)
HGS_DEFINE_ERROR(NonResidue)
HGS_DEFINE_ERROR(BadPrime)
HGS_DEFINE_ERROR(NotSimpleRoot)
HGS_DEFINE_ERROR(PrecisionExhausted)
HGS_DEFINE_ERROR(InvalidF)
HGS_DEFINE_ERROR(DegenerateSequence)
HGS_DEFINE_ERROR(UnsupportedFactorization)
HGS_DEFINE_ERROR(NotHenselPrime)
HGS_DEFINE_ERROR(EmptySampleSet)
HGS_DEFINE_ERROR(ParseError)

#undef HGS_DEFINE_ERROR

}  // namespace hgs
