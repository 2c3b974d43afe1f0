#pragma once

#include <stdexcept>
#include <string>

namespace hermeq {

// Every domain error carries one of these codes. The CLI maps codes to exit
// statuses; library users can switch on code() instead of parsing messages.
enum class Errc {
  DimensionMismatch,
  NotHermitian,
  NotPsd,
  Unsolvable,
  UnsupportedQuery,
  RouteDisagreement,
  FormulaRangeError,
  RangeHypothesisViolated,
  ParseError,
};

const char* errcName(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errcName(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace hermeq
