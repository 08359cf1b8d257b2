#include "nalab/error.hpp"

namespace nalab {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::BoundMismatch: return "BoundMismatch";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::ParityMismatch: return "ParityMismatch";
    case Errc::ParityViolation: return "ParityViolation";
    case Errc::LambdaUndefined: return "LambdaUndefined";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UndeclaredVariable: return "UndeclaredVariable";
    case Errc::NotHomogeneous: return "NotHomogeneous";
    case Errc::DegreeTooLow: return "DegreeTooLow";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::UnknownAlgebra: return "UnknownAlgebra";
    case Errc::InvalidParameter: return "InvalidParameter";
    case Errc::ConfigError: return "ConfigError";
  }
  return "Error";
}

Error::Error(Errc code, const std::string& msg)
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace nalab
