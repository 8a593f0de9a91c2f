#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gip {

enum class Errc {
  InvalidArgument,
  SumMismatch,
  ZeroBlock,
  OutOfRange,
  SizeMismatch,
  LengthMismatch,
  UnsupportedEntry,
  ZeroDegreeVariable,
  NotAnIdentity,
  BoundExceeded,
  LabelMismatch,
  CapExceeded,
  TargetNotIdentity,
  GeneratorNotIdentity,
};

std::string_view to_string(Errc code) noexcept;

/// Every precondition failure in the library surfaces as this exception.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

}  // namespace gip
