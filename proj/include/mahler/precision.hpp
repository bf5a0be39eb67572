#ifndef MAHLER_PRECISION_HPP
#define MAHLER_PRECISION_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include "mahler/errors.hpp"

namespace mahler {

// Variable-precision real backed by MPFR.  The active precision of newly
// constructed values is the thread default, which PrecisionContext::Scope
// manages; see below.
using Real = boost::multiprecision::mpfr_float;

// Exact arbitrary-size integers and rationals (GMP).
using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Binary working precision shared by every floating operation.
///
/// All operations given the same PrecisionContext and the same inputs are
/// bit-for-bit deterministic.  The underlying MPFR precision is provisioned
/// at or slightly above bits() (the Boost precision interface is decimal,
/// so the bit count is rounded up, never down).
class PrecisionContext {
 public:
  static constexpr unsigned kMinBits = 64;
  static constexpr unsigned kDefaultBits = 512;

  explicit PrecisionContext(unsigned bits = kDefaultBits) : bits_(bits) {
    if (bits < kMinBits)
      throw domain_error("PrecisionContext: bits must be at least 64");
  }

  unsigned bits() const noexcept { return bits_; }

  /// Digits carried by serialized decimal output: ceil(bits * log10(2)).
  unsigned display_digits() const noexcept {
    return static_cast<unsigned>((static_cast<unsigned long>(bits_) * 301 + 999) / 1000);
  }

  PrecisionContext with_extra_bits(unsigned extra) const {
    return PrecisionContext(bits_ + extra);
  }

  /// RAII guard: sets the thread default MPFR precision on construction and
  /// restores the previous default on destruction.  Nesting is fine.
  class Scope {
   public:
    explicit Scope(unsigned digits10)
        : saved_(Real::default_precision()) {
      Real::default_precision(digits10);
    }
    ~Scope() { Real::default_precision(saved_); }
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;
    Scope(Scope&&) = delete;

   private:
    unsigned saved_;
  };

  /// Activate this context's precision for the current scope.
  [[nodiscard]] Scope activate() const { return Scope(working_digits10(bits_)); }

  /// Activate with extra guard bits (internal headroom for cancelling sums);
  /// results must be rounded back via round_to_working under activate().
  [[nodiscard]] Scope activate_guarded(unsigned guard_bits) const {
    return Scope(working_digits10(bits_ + guard_bits));
  }

 private:
  static unsigned working_digits10(unsigned bits) {
    // ceil((bits + 4) * log10(2)) + 2: guarantees mpfr precision >= bits.
    return static_cast<unsigned>((static_cast<unsigned long>(bits + 4) * 301 + 999) / 1000) + 2;
  }

  unsigned bits_;
};

/// 2^e at the active precision.
inline Real pow2(long e) { return ldexp(Real(1), static_cast<int>(e)); }

/// Re-round a value to the active (thread default) precision.
inline Real round_to_working(const Real& x) {
  Real r;
  mpfr_set(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

/// pi at the active precision.
inline Real const_pi() {
  Real p;
  mpfr_const_pi(p.backend().data(), MPFR_RNDN);
  return p;
}

inline bool is_finite(const Real& x) {
  return mpfr_number_p(x.backend().data()) != 0;
}

inline void ensure_finite(const Real& x, const char* what) {
  if (!is_finite(x)) throw domain_error(std::string(what) + ": non-finite value");
}

}  // namespace mahler

#endif  // MAHLER_PRECISION_HPP
