#ifndef MAHLER_SPECIAL_FUNCTIONS_HPP
#define MAHLER_SPECIAL_FUNCTIONS_HPP

#include <vector>

#include "mahler/complex_value.hpp"
#include "mahler/precision.hpp"

namespace mahler::sf {

/// Arithmetic-geometric mean of two positive reals.  Fixed point of
/// (x, y) -> ((x+y)/2, sqrt(xy)); iteration stops once |x - y| drops below
/// 2^(-bits+8) (scaled by the iterate magnitude for large inputs).
Real agm(const Real& x, const Real& y, const PrecisionContext& ctx);

/// Complete elliptic integral of the first kind K(k) for 0 <= k < 1,
/// evaluated as pi / (2 agm(1, sqrt(1 - k^2))).  k = 1 is the logarithmic
/// divergence point and is rejected along with every k outside [0, 1).
Real elliptic_k(const Real& k, const PrecisionContext& ctx);

/// Dilogarithm Li2(z), analytically continued to the cut plane C \ [1,inf).
/// Inputs within 2^(-bits/2) of the cut are rejected rather than perturbed.
ComplexValue dilog(const ComplexValue& z, const PrecisionContext& ctx);

/// Bloch-Wigner dilogarithm D(z) = Im(Li2(z)) + arg(1 - z) log|z|.
/// Real-valued and single-valued off the cut; rejects z = 0 and the cut.
Real bloch_wigner(const ComplexValue& z, const PrecisionContext& ctx);

/// Bessel function J0(t).  Power series with cancellation guard bits for
/// |t| <= series_split, library evaluation above it.  Correctness, not
/// speed, is the contract here; bulk double-precision consumers use
/// hardware evaluations instead.
Real bessel_j0(const Real& t, const PrecisionContext& ctx, double series_split = 20.0);

/// Exact harmonic number H_l = 1 + 1/2 + ... + 1/l, with H_0 = 0.
Rational harmonic(unsigned l);

/// Exact binomial coefficient C(n, k) (0 when k > n).
BigInt binomial(unsigned long n, unsigned long k);

/// Exact multinomial coefficient k! / (l_0! ... l_n!) for k = sum parts,
/// computed as the telescoping product of binomials
/// C(l_0, l_0) C(l_0+l_1, l_1) ... C(l_0+...+l_n, l_n).
BigInt multinomial(const std::vector<unsigned long>& parts);

namespace detail {
/// Exact Bernoulli-over-factorial coefficients B_k / (k+1)!, k = 0..count-1,
/// for the dilogarithm's log-argument series.  Cached across calls.
std::vector<Rational> bernoulli_over_factorial(std::size_t count);
}  // namespace detail

}  // namespace mahler::sf

#endif  // MAHLER_SPECIAL_FUNCTIONS_HPP
