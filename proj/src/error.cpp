#include "pbw/error.hpp"

namespace pbw {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::Undefined: return "Undefined";
    case Errc::EmptyCycle: return "EmptyCycle";
    case Errc::BadIndex: return "BadIndex";
    case Errc::UnsupportedArity: return "UnsupportedArity";
    case Errc::NotDeformation: return "NotDeformation";
    case Errc::FiltrationUnbounded: return "FiltrationUnbounded";
    case Errc::Inhomogeneous: return "Inhomogeneous";
    case Errc::PathMismatch: return "PathMismatch";
    case Errc::BadTriple: return "BadTriple";
    case Errc::NoObstruction: return "NoObstruction";
    case Errc::BadSpecialization: return "BadSpecialization";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

}  // namespace pbw
