#pragma once

#include <stdexcept>
#include <string>

namespace modrep {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define MODREP_ERROR(Name)                 \
  struct Name : Error {                    \
    using Error::Error;                    \
  }

MODREP_ERROR(DivisionByZero);
MODREP_ERROR(ContextMismatch);
MODREP_ERROR(ShapeError);
MODREP_ERROR(OutOfSubgroup);
MODREP_ERROR(UnknownName);
MODREP_ERROR(DomainError);
MODREP_ERROR(DegenerateCharacter);
MODREP_ERROR(CharacterMismatch);
MODREP_ERROR(SupportOverflow);
MODREP_ERROR(NotEigen);
MODREP_ERROR(RangeError);
MODREP_ERROR(ChecksumError);
MODREP_ERROR(ParseError);
MODREP_ERROR(UsageError);

#undef MODREP_ERROR

// Raised when a function-model action needs a larger window than allowed.
struct WindowOverflow : Error {
  WindowOverflow(int m, int n)
      : Error("window overflow: need at least M=" + std::to_string(m) +
              ", N=" + std::to_string(n)),
        required_m(m), required_n(n) {}
  int required_m;
  int required_n;
};

}  // namespace modrep
