#pragma once

#include <stdexcept>
#include <string>

namespace pbw {

/// Failure categories raised by the library. Each maps to one contract
/// violation; the CLI translates them to exit codes.
enum class Errc {
  DivisionByZero,
  AmbientMismatch,
  Undefined,
  EmptyCycle,
  BadIndex,
  UnsupportedArity,
  NotDeformation,
  FiltrationUnbounded,
  Inhomogeneous,
  PathMismatch,
  BadTriple,
  NoObstruction,
  BadSpecialization,
  OutOfRange,
  Parse,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace pbw
