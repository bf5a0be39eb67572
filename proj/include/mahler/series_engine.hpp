#ifndef MAHLER_SERIES_ENGINE_HPP
#define MAHLER_SERIES_ENGINE_HPP

#include <optional>
#include <vector>

#include "mahler/complex_value.hpp"
#include "mahler/precision.hpp"

namespace mahler::series {

/// Coefficients D = (W_0, ..., W_n) of the linear form
/// W_0 Z_0 + ... + W_n Z_n, n >= 2.  The series depend on the coefficient
/// moduli only, so those are cached on construction along with the norms
/// c(D) = sqrt((n+1) sum |W_m|^2) and d(D) = sum |W_m|; complex phases are
/// retained for display.
class CoefficientTuple {
 public:
  CoefficientTuple(std::vector<ComplexValue> w, const PrecisionContext& ctx);

  unsigned n() const noexcept { return static_cast<unsigned>(w_.size()) - 1; }
  const std::vector<ComplexValue>& coefficients() const noexcept { return w_; }
  const std::vector<Real>& moduli() const noexcept { return moduli_; }
  const Real& c() const noexcept { return c_; }
  const Real& d() const noexcept { return d_; }

  /// True when every |W_m| agrees to relative 2^(-bits/2): the D = r(1,...,1)
  /// ray excluded from the shifted series for l >= 2.
  bool all_moduli_equal(const PrecisionContext& ctx) const;

  CoefficientTuple scaled(const Real& lambda, const PrecisionContext& ctx) const;

 private:
  std::vector<ComplexValue> w_;
  std::vector<Real> moduli_;
  Real c_;
  Real d_;
};

struct SeriesConfig {
  unsigned max_k = 200;  // truncation depth N
  unsigned l = 1;        // shift parameter
  PrecisionContext precision{PrecisionContext::kDefaultBits};
};

enum class Method { kE1, kE2, kCassaigneMaillot, kQuadrature };

const char* method_name(Method m);

struct ErrorBound {
  Real value;
  Real a_d;  // the caller-supplied bounding constant (paper leaves it symbolic)
};

struct MahlerEstimate {
  Real value;
  Method method;
  unsigned n_used = 0;               // truncation depth or grid size
  std::optional<unsigned> l;         // shift, E2 only
  std::optional<ErrorBound> bound;   // present only for the series methods
  // Diagnostic: some inner sum cancelled past 2^(bits/2); the result is
  // still sound (a fatal precision_error guards genuine noise) but fewer
  // than half the working bits survive in the worst inner sum.
  bool cancellation_flagged = false;
};

/// Series coefficient a(n,k,D): the sum over weak compositions
/// l_0 + ... + l_n = k of multinomial(k; l)^2 * prod |W_m|^(2 l_m).
/// Multinomials are exact big integers; conversion to floating point
/// happens once per composition.
Real coefficient_a(unsigned n, unsigned k, const CoefficientTuple& d,
                   const PrecisionContext& ctx);

/// All of a(n,0..max_k,D) in one pass: depth-first enumeration of the
/// composition box bounded by the remaining budget (the appendix's nested
/// loops without the wasted out-of-budget corner), accumulating into a[k]
/// in lexicographic order.
std::vector<Real> coefficient_batch(unsigned n, unsigned max_k, const CoefficientTuple& d,
                                    const PrecisionContext& ctx);

/// First series form: log c(D) - (1/2) sum_{j<=N} (1/j) sum_{k<=j}
/// C(j,k) (-1)^k a(n,k,D) / c^(2k).
MahlerEstimate mahler_e1(const CoefficientTuple& d, const SeriesConfig& cfg);

/// Partial sum to j = N of the shifted inner series
/// S_D(l) = sum_j (2j+l)/(j(j+l)) sum_k C(j+l+k-1,k) C(j,k) (-1)^k a_k/c^(2k).
Real s_d_partial(const CoefficientTuple& d, unsigned l, const SeriesConfig& cfg);

/// Second series form: log c(D) - H_l/2 - S_D(l)/2.  Valid for l in {0,1}
/// on every D; l >= 2 requires D != r(1,...,1) (validity_error otherwise).
MahlerEstimate mahler_e2(const CoefficientTuple& d, unsigned l, const SeriesConfig& cfg);

/// Truncation bound for E1: |S| (2 pi)^(1/4) A_D c(D)^2 / (3 N^(3/4)).
/// A_D is caller-supplied (default 1): the paper never pins it numerically.
Real bound_e1(const CoefficientTuple& d, unsigned n_trunc, const Real& a_d,
              const PrecisionContext& ctx);

/// Truncation bound for E2.  l = 1: |S| 3 2^(1/4) A_D c^2 / (sqrt(pi) sqrt(N));
/// l >= 2: |S| 3 sqrt(2) c^2 A_D A(D,l) / (2 sqrt(N)) with
/// A(D,l) = 6 sqrt(2) (1 - d^2/c^2)^(-(l-1)/2), undefined when d = c.
Real bound_e2(const CoefficientTuple& d, unsigned n_trunc, unsigned l, const Real& a_d,
              const PrecisionContext& ctx);

/// Experimental error constant: max over N in {1..n_max} of
/// |reference_m - E2(N)| sqrt(N), with the coefficient batch computed once.
Real estimate_c(const CoefficientTuple& d, unsigned l, const Real& reference_m,
                unsigned n_max, const SeriesConfig& cfg);

namespace detail {
/// Shared guts of the series evaluations: 1-indexed partial sums of
/// sum_j weight_j * inner_j together with cancellation diagnostics.
struct SeriesSums {
  std::vector<Real> partial;  // partial[j] = sum of the first j terms; partial[0] = 0
  bool cancellation_flagged = false;
};
SeriesSums e1_partials(const std::vector<Real>& ratios, unsigned n_terms,
                       const PrecisionContext& ctx);
SeriesSums sdl_partials(const std::vector<Real>& ratios, unsigned l, unsigned n_terms,
                        const PrecisionContext& ctx);
/// ratios[k] = a(n,k,D) / c(D)^(2k)
std::vector<Real> moment_ratios(const std::vector<Real>& a, const Real& c,
                                const PrecisionContext& ctx);
}  // namespace detail

}  // namespace mahler::series

#endif  // MAHLER_SERIES_ENGINE_HPP
