#ifndef MAHLER_RAMBLE_HPP
#define MAHLER_RAMBLE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mahler/precision.hpp"

namespace mahler::ramble {

/// Step lengths of a 3-step planar walk, kept sorted r0 >= r1 >= r2 > 0 so
/// the singularity-set formulas apply verbatim.
class StepLengths {
 public:
  StepLengths(Real a, Real b, Real c);

  const Real& r0() const noexcept { return r_[0]; }
  const Real& r1() const noexcept { return r_[1]; }
  const Real& r2() const noexcept { return r_[2]; }

  Real sum() const { return r_[0] + r_[1] + r_[2]; }
  /// r0 - r1 - r2; the left support edge when positive.
  Real small_diff() const { return r_[0] - r_[1] - r_[2]; }

  StepLengths scaled(const Real& lambda) const;

 private:
  Real r_[3];
};

/// Divergence points S (strictly positive candidates among
/// {r0+r1-r2, r0-r1+r2, -(r0-r1-r2)}) and non-differentiability points S*,
/// both ascending and deduplicated.
struct SingularitySets {
  std::vector<Real> s;
  std::vector<Real> s_star;
};

enum class Regime {
  kOutsideSupport,
  kDeltaDominates,
  kProductDominates,
  kDivergent,
  kBoundary,
};

const char* regime_name(Regime r);

struct RegimeClassification {
  Regime tag;
  Real delta_squared;           // may be negative only under kOutsideSupport
  Real product;                 // a * r0 * r1 * r2
  std::optional<Real> singularity;  // set when kDivergent
};

/// (r0+r1+r2-a)(a+r1+r2-r0)(a+r0+r2-r1)(a+r0+r1-r2) / 16.  Negative exactly
/// when the largest of {a, r0, r1, r2} exceeds the sum of the others.
Real delta_squared(const Real& a, const StepLengths& steps, const PrecisionContext& ctx);

SingularitySets singularity_sets(const StepLengths& steps, const PrecisionContext& ctx);

/// Which branch of the closed form applies at a.  Membership in S uses
/// tolerance 2^(-bits/2) * max(1, a), so exact inputs classify exactly and
/// floating inputs near S fail loudly instead of feeding K a modulus ~1.
RegimeClassification classify(const Real& a, const StepLengths& steps,
                              const PrecisionContext& ctx);

/// Closed form of I(a) = int_0^inf t J0(at) J0(r0 t) J0(r1 t) J0(r2 t) dt:
/// 0 outside the support, else an elliptic-integral branch selected by the
/// sign of Delta^2 - a r0 r1 r2.  Throws divergence_error for a in S.
Real integral(const Real& a, const StepLengths& steps, const PrecisionContext& ctx);

/// Walk terminal-distance density p3(a) = a * I(a).
Real density(const Real& a, const StepLengths& steps, const PrecisionContext& ctx);

/// Coefficient of the logarithmic blow-up at b in S: fits
/// I(b + eps) ~ -alpha log(eps) + beta by differencing closed-form values at
/// consecutive offsets; the last two estimates must agree to 1%.
Real log_singularity_coefficient(const Real& b, const StepLengths& steps,
                                 const std::vector<Real>& offsets,
                                 const PrecisionContext& ctx);

struct DensityCurve {
  std::vector<std::pair<Real, Real>> rows;  // (a, p3(a)), strictly increasing in a
};

/// Uniform sampling of each open interval between consecutive S* points,
/// skipping exclusion_radius around each divergence point; finite interval
/// endpoints (a = r0+r1+r2, and a = r0-r1-r2 when positive) get exact rows.
DensityCurve sample_density_curve(const StepLengths& steps, unsigned points_per_interval,
                                  const Real& exclusion_radius,
                                  const PrecisionContext& ctx);

std::string to_csv(const DensityCurve& curve, unsigned significant_digits = 20);

}  // namespace mahler::ramble

#endif  // MAHLER_RAMBLE_HPP
