#pragma once

#include <stdexcept>
#include <string>

namespace qgl2 {

enum class Errc {
  ZeroDenominator,
  DivisionByZero,
  NegativeExponentOnNonInvertible,
  AlgebraMismatch,
  Unbounded,
  AntipodeUnavailable,
  TorusPointOutsideSubgroup,
  NonToralElement,
  SuiteInapplicable,
  SyntaxError,
  UnknownSymbol,
  InvalidExponent,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace qgl2
