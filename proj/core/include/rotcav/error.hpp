#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rotcav {

enum class ErrorCode {
  InvalidInput,
  SuperluminalOrbit,
  NonPositiveFrequency,
  NotAtResonance,
  DivergentAtResonance,
  WrongRegime,
  CoincidentPeaks,
  QuadratureNotConverged,
  BothRatesZero,
  NegativeTime,
  WindowExcludesPeak,
  UnknownScenario,
  InvalidConfig,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (notably the CLI) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  // True for failures of an iterative numerical method, as opposed to bad input.
  bool is_numerical() const noexcept {
    return code_ == ErrorCode::QuadratureNotConverged ||
           code_ == ErrorCode::WindowExcludesPeak;
  }

 private:
  ErrorCode code_;
};

}  // namespace rotcav
