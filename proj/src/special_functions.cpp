#include "mahler/special_functions.hpp"

#include <cmath>
#include <cstddef>
#include <mutex>

#include "mahler/errors.hpp"

namespace mahler::sf {

Real agm(const Real& x, const Real& y, const PrecisionContext& ctx) {
  ensure_finite(x, "agm");
  ensure_finite(y, "agm");
  if (!(x > 0) || !(y > 0)) throw domain_error("agm: arguments must be positive");

  auto scope = ctx.activate();
  Real a = round_to_working(x);
  Real g = round_to_working(y);
  if (a < g) a.swap(g);

  // Quadratic convergence: the loop runs O(log bits) times.
  for (int i = 0; i < 200; ++i) {
    Real threshold = pow2(-static_cast<long>(ctx.bits()) + 8);
    if (a > 1) threshold *= a;
    if (abs(a - g) < threshold) break;
    Real mid = (a + g) / 2;
    g = sqrt(a * g);
    a = mid;
  }
  return (a + g) / 2;
}

Real elliptic_k(const Real& k, const PrecisionContext& ctx) {
  ensure_finite(k, "elliptic_k");
  if (k < 0) throw domain_error("elliptic_k: modulus must be non-negative");
  if (k >= 1)
    throw domain_error("elliptic_k: K diverges as the modulus reaches 1; got k >= 1");

  auto scope = ctx.activate();
  Real kk = round_to_working(k);
  Real complement = sqrt(Real(1 - kk * kk));
  return const_pi() / (2 * agm(Real(1), complement, ctx));
}

namespace detail {

std::vector<Rational> bernoulli_over_factorial(std::size_t count) {
  static std::mutex mtx;
  static std::vector<Rational> bernoulli;  // B_0, B_1, ...
  static std::vector<Rational> coeff;      // B_k / (k+1)!
  static BigInt factorial{1};              // (coeff.size())!

  std::lock_guard<std::mutex> lock(mtx);
  while (bernoulli.size() < count) {
    std::size_t m = bernoulli.size();
    if (m == 0) {
      bernoulli.emplace_back(1);
    } else {
      // sum_{j=0}^{m} C(m+1, j) B_j = 0
      Rational s = 0;
      for (std::size_t j = 0; j < m; ++j)
        s += Rational(binomial(m + 1, j)) * bernoulli[j];
      bernoulli.push_back(-s / Rational(m + 1));
    }
    factorial *= BigInt(m + 1);  // now (m+1)!
    coeff.push_back(bernoulli[m] / Rational(factorial));
  }
  return std::vector<Rational>(coeff.begin(), coeff.begin() + count);
}

namespace {

// Distance from z to the branch cut [1, inf) on the real axis.
Real cut_distance(const ComplexValue& z) {
  if (z.re >= 1) return abs(z.im);
  return abs(ComplexValue(Real(z.re - 1), z.im));
}

// sum_{k>=0} B_k u^{k+1} / (k+1)!  == Li2(1 - e^{-u}); converges for |u| < 2pi.
ComplexValue dilog_log_series(const ComplexValue& u, const PrecisionContext& ctx) {
  Real stop = pow2(-static_cast<long>(ctx.bits()) - 8);
  Real stop2 = stop * stop;

  std::size_t have = 64;
  auto coeff = bernoulli_over_factorial(have);
  ComplexValue sum;
  ComplexValue upow = u;
  for (std::size_t k = 0;; ++k) {
    if (k >= have) {
      have += 64;
      coeff = bernoulli_over_factorial(have);
      if (have > 4096)
        throw internal_error("dilog: log-argument series failed to converge");
    }
    if (coeff[k] != 0) {
      ComplexValue term = upow * Real(coeff[k]);
      sum = sum + term;
      if (k > 0 && norm(term) < stop2) break;
    }
    upow = upow * u;
  }
  return sum;
}

}  // namespace
}  // namespace detail

ComplexValue dilog(const ComplexValue& z, const PrecisionContext& ctx) {
  ensure_finite(z, "dilog");
  if (z.is_zero()) return ComplexValue();

  {
    auto scope = ctx.activate();
    if (detail::cut_distance(z) < pow2(-static_cast<long>(ctx.bits() / 2)))
      throw domain_error("dilog: input on (or too close to) the branch cut [1, inf)");
  }

  auto scope = ctx.activate_guarded(32);
  ComplexValue w(round_to_working(z.re), round_to_working(z.im));
  Real pi = const_pi();
  Real pi2_6 = pi * pi / 6;
  ComplexValue one(Real(1));

  // Map into the region where the log-argument series converges quickly
  // (|z| <= 1, Re z <= 1/2 up to the standard functional equations).
  ComplexValue u, rest;
  int sign;
  Real nz = norm(w);
  if (w.re <= Real(1) / 2) {
    if (nz > 1) {
      ComplexValue lz = log(-w);
      u = -log(one - one / w);
      rest = ComplexValue(Real(-pi2_6)) - lz * lz * (Real(1) / 2);
      sign = -1;
    } else {
      u = -log(one - w);
      rest = ComplexValue();
      sign = +1;
    }
  } else {
    if (nz <= 2 * w.re) {  // |z - 1| <= 1
      u = -log(w);
      rest = ComplexValue(pi2_6) - log(w) * log(one - w);
      sign = -1;
    } else {
      ComplexValue lz = log(-w);
      u = -log(one - one / w);
      rest = ComplexValue(Real(-pi2_6)) - lz * lz * (Real(1) / 2);
      sign = -1;
    }
  }

  ComplexValue series = detail::dilog_log_series(u, ctx);
  ComplexValue value = (sign > 0 ? series : -series) + rest;
  ensure_finite(value, "dilog");

  auto out = ctx.activate();
  return {round_to_working(value.re), round_to_working(value.im)};
}

Real bloch_wigner(const ComplexValue& z, const PrecisionContext& ctx) {
  ensure_finite(z, "bloch_wigner");
  if (z.is_zero()) throw domain_error("bloch_wigner: undefined at z = 0");

  ComplexValue li2 = dilog(z, ctx);  // also rejects the cut
  auto scope = ctx.activate();
  ComplexValue w(round_to_working(z.re), round_to_working(z.im));
  Real value = li2.im + arg(ComplexValue(Real(1 - w.re), Real(-w.im))) * log(abs(w));
  ensure_finite(value, "bloch_wigner");
  return value;
}

Real bessel_j0(const Real& t, const PrecisionContext& ctx, double series_split) {
  ensure_finite(t, "bessel_j0");
  double td = std::fabs(t.convert_to<double>());

  if (td <= series_split) {
    // The alternating series cancels down from a largest term of roughly
    // e^|t|, i.e. ~1.443*|t| bits; guard accordingly.
    unsigned guard = static_cast<unsigned>(std::ceil(1.4427 * td)) + 32;
    auto scope = ctx.activate_guarded(guard);
    Real tt = round_to_working(t);
    Real x = -(tt * tt) / 4;
    Real term = 1;
    Real sum = 1;
    Real stop = pow2(-static_cast<long>(ctx.bits()) - 8);
    for (unsigned long m = 1; m < 100000; ++m) {
      term *= x / Real(m * m);
      sum += term;
      if (abs(term) < stop) break;
    }
    auto out = ctx.activate();
    return round_to_working(sum);
  }

  auto scope = ctx.activate_guarded(32);
  Real tt = round_to_working(t);
  Real r;
  mpfr_j0(r.backend().data(), tt.backend().data(), MPFR_RNDN);
  auto out = ctx.activate();
  return round_to_working(r);
}

Rational harmonic(unsigned l) {
  Rational h = 0;
  for (unsigned i = 1; i <= l; ++i) h += Rational(1, i);
  return h;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.backend().data(), n, k);
  return r;
}

BigInt multinomial(const std::vector<unsigned long>& parts) {
  if (parts.empty()) throw domain_error("multinomial: parts must be non-empty");
  unsigned long s = 0;
  BigInt result{1};
  for (unsigned long p : parts) {
    s += p;
    result *= binomial(s, p);
  }
  return result;
}

}  // namespace mahler::sf
