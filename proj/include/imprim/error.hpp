#pragma once

#include <stdexcept>
#include <string>

namespace imprim {

enum class Errc {
  InvalidCharacteristic,
  InvalidExtension,
  DivisionByZero,
  InvalidIndex,
  BadE3,
  BadH,
  BadE1Consistency,
  BadE2NC,
  BadCharForBeta,
  BadExponentOrder,
  NotATorusElement,
  NotEnumerable,
  NotApplicable,
  Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace imprim
