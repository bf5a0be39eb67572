#ifndef MAHLER_COMPLEX_VALUE_HPP
#define MAHLER_COMPLEX_VALUE_HPP

#include <utility>

#include "mahler/precision.hpp"

namespace mahler {

/// Complex number over the working-precision reals.  Components are kept
/// finite; operations that would produce infinities or NaN throw instead.
struct ComplexValue {
  Real re;
  Real im;

  ComplexValue() : re(0), im(0) {}
  ComplexValue(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit ComplexValue(Real r) : re(std::move(r)), im(0) {}
  explicit ComplexValue(double r) : re(r), im(0) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
};

inline ComplexValue operator+(const ComplexValue& a, const ComplexValue& b) {
  return {Real(a.re + b.re), Real(a.im + b.im)};
}
inline ComplexValue operator-(const ComplexValue& a, const ComplexValue& b) {
  return {Real(a.re - b.re), Real(a.im - b.im)};
}
inline ComplexValue operator-(const ComplexValue& a) {
  return {Real(-a.re), Real(-a.im)};
}
inline ComplexValue operator*(const ComplexValue& a, const ComplexValue& b) {
  return {Real(a.re * b.re - a.im * b.im), Real(a.re * b.im + a.im * b.re)};
}
inline ComplexValue operator*(const ComplexValue& a, const Real& s) {
  return {Real(a.re * s), Real(a.im * s)};
}
inline ComplexValue operator*(const Real& s, const ComplexValue& a) { return a * s; }

ComplexValue operator/(const ComplexValue& a, const ComplexValue& b);

inline ComplexValue conj(const ComplexValue& z) { return {z.re, Real(-z.im)}; }

/// |z|^2, exact in the sense of one rounding per operation.
inline Real norm(const ComplexValue& z) { return z.re * z.re + z.im * z.im; }

/// |z|.  MPFR's exponent range makes the naive formula overflow-free.
inline Real abs(const ComplexValue& z) { return sqrt(norm(z)); }

/// Principal argument in (-pi, pi].
inline Real arg(const ComplexValue& z) { return atan2(z.im, z.re); }

/// Principal complex logarithm; throws on z = 0.
ComplexValue log(const ComplexValue& z);

/// r * e^{i theta}.
inline ComplexValue from_polar(const Real& r, const Real& theta) {
  return {Real(r * cos(theta)), Real(r * sin(theta))};
}

/// Principal square root.
ComplexValue sqrt(const ComplexValue& z);

inline void ensure_finite(const ComplexValue& z, const char* what) {
  ensure_finite(z.re, what);
  ensure_finite(z.im, what);
}

}  // namespace mahler

#endif  // MAHLER_COMPLEX_VALUE_HPP
