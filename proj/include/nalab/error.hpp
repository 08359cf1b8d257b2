#pragma once

#include <stdexcept>
#include <string>

namespace nalab {

enum class Errc {
  UnknownVariable,
  BoundMismatch,
  RingMismatch,
  ContextMismatch,
  ParityMismatch,
  ParityViolation,
  LambdaUndefined,
  SyntaxError,
  UndeclaredVariable,
  NotHomogeneous,
  DegreeTooLow,
  CapExceeded,
  UnknownAlgebra,
  InvalidParameter,
  ConfigError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg);
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& msg);

}  // namespace nalab
