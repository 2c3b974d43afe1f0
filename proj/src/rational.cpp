#include "hermeq/rational.hpp"

#include <stdexcept>

#include "hermeq/error.hpp"

namespace hermeq {

const char* errcName(Errc c) {
  switch (c) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::NotPsd: return "NotPsd";
    case Errc::Unsolvable: return "Unsolvable";
    case Errc::UnsupportedQuery: return "UnsupportedQuery";
    case Errc::RouteDisagreement: return "RouteDisagreement";
    case Errc::FormulaRangeError: return "FormulaRangeError";
    case Errc::RangeHypothesisViolated: return "RangeHypothesisViolated";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.isZero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::fromString(const std::string& s) {
  // Validate by hand so malformed input surfaces as ParseError, not as a
  // GMP abort. Grammar: [+-]digits ( "/" digits )?, denominator nonzero.
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t numStart = i;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  if (i == numStart) fail(Errc::ParseError, "bad rational literal '" + s + "'");
  std::string den;
  if (i < s.size()) {
    if (s[i] != '/') fail(Errc::ParseError, "bad rational literal '" + s + "'");
    ++i;
    std::size_t denStart = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == denStart || i != s.size())
      fail(Errc::ParseError, "bad rational literal '" + s + "'");
    den = s.substr(denStart);
    bool allZero = den.find_first_not_of('0') == std::string::npos;
    if (allZero) fail(Errc::ParseError, "zero denominator in '" + s + "'");
  }
  // GMP rejects a leading '+', so hand it the bare digits.
  mpq_class v(s[0] == '+' ? s.substr(1) : s, 10);
  v.canonicalize();
  return Rational(std::move(v));
}

std::string Rational::str() const {
  std::string out = v_.get_num().get_str();
  if (v_.get_den() != 1) out += "/" + v_.get_den().get_str();
  return out;
}

}  // namespace hermeq
