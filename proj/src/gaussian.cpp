#include "hermeq/gaussian.hpp"

#include <stdexcept>

namespace hermeq {

GaussianRational GaussianRational::inverse() const {
  Rational n = normSq();
  if (n.isZero()) throw std::domain_error("GaussianRational: division by zero");
  return {re / n, -im / n};
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  return *this *= o.inverse();
}

std::string GaussianRational::str() const {
  if (im.isZero()) return re.str();
  std::string i = im.str() + "i";
  if (re.isZero()) return i;
  return re.str() + (im.sign() > 0 ? "+" : "") + i;
}

}  // namespace hermeq
