#include "mahler/complex_value.hpp"

#include "mahler/errors.hpp"

namespace mahler {

ComplexValue operator/(const ComplexValue& a, const ComplexValue& b) {
  Real den = norm(b);
  if (den == 0) throw domain_error("complex division by zero");
  return {Real((a.re * b.re + a.im * b.im) / den),
          Real((a.im * b.re - a.re * b.im) / den)};
}

ComplexValue log(const ComplexValue& z) {
  if (z.is_zero()) throw domain_error("log of zero");
  return {Real(log(abs(z))), arg(z)};
}

ComplexValue sqrt(const ComplexValue& z) {
  if (z.is_zero()) return ComplexValue();
  return from_polar(sqrt(abs(z)), Real(arg(z) / 2));
}

}  // namespace mahler
