#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lnfft {

enum class Errc {
  OutOfRange,
  DuplicateNode,
  NonPositiveDamping,
  InvalidArgument,
  NonFinite,
  LengthMismatch,
  SizeMismatch,
  Overflow,
  SingularDerivative,
  AmplificationWarning,
  NonConvergence,
  SingularMatrix,
  MaxIterations,
  ZeroReference,
  Parse,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace lnfft
