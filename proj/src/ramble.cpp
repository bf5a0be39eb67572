#include "mahler/ramble.hpp"

#include <algorithm>
#include <sstream>

#include "mahler/errors.hpp"
#include "mahler/special_functions.hpp"

namespace mahler::ramble {

StepLengths::StepLengths(Real a, Real b, Real c) : r_{std::move(a), std::move(b), std::move(c)} {
  for (const Real& r : r_) {
    ensure_finite(r, "StepLengths");
    if (!(r > 0)) throw domain_error("StepLengths: step lengths must be positive");
  }
  std::sort(std::begin(r_), std::end(r_), [](const Real& x, const Real& y) { return x > y; });
}

StepLengths StepLengths::scaled(const Real& lambda) const {
  if (!(lambda > 0)) throw domain_error("StepLengths::scaled: factor must be positive");
  return StepLengths(Real(r_[0] * lambda), Real(r_[1] * lambda), Real(r_[2] * lambda));
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::kOutsideSupport: return "OutsideSupport";
    case Regime::kDeltaDominates: return "DeltaDominates";
    case Regime::kProductDominates: return "ProductDominates";
    case Regime::kDivergent: return "Divergent";
    case Regime::kBoundary: return "Boundary";
  }
  return "?";
}

Real delta_squared(const Real& a, const StepLengths& st, const PrecisionContext& ctx) {
  ensure_finite(a, "delta_squared");
  if (!(a > 0)) throw domain_error("delta_squared: a must be positive");
  auto scope = ctx.activate();
  Real aa = round_to_working(a);
  return (st.r0() + st.r1() + st.r2() - aa) * (aa + st.r1() + st.r2() - st.r0()) *
         (aa + st.r0() + st.r2() - st.r1()) * (aa + st.r0() + st.r1() - st.r2()) / 16;
}

namespace {

// Insert keeping ascending order; values closer than the membership
// tolerance merge (coincident candidates, e.g. all three for (1,1,1)).
void insert_dedup(std::vector<Real>& v, const Real& x, const PrecisionContext& ctx) {
  Real tol = pow2(-static_cast<long>(ctx.bits() / 2));
  if (abs(x) > 1) tol *= abs(x);
  for (const Real& y : v)
    if (abs(x - y) <= tol) return;
  v.push_back(x);
  std::sort(v.begin(), v.end());
}

}  // namespace

SingularitySets singularity_sets(const StepLengths& st, const PrecisionContext& ctx) {
  auto scope = ctx.activate();
  SingularitySets out;
  Real candidates[3] = {Real(st.r0() + st.r1() - st.r2()), Real(st.r0() - st.r1() + st.r2()),
                        Real(st.r1() + st.r2() - st.r0())};
  for (const Real& c : candidates)
    if (c > 0) insert_dedup(out.s, c, ctx);

  out.s_star = out.s;
  Real diff = st.small_diff();
  insert_dedup(out.s_star, diff < 0 ? Real(0) : diff, ctx);
  insert_dedup(out.s_star, st.sum(), ctx);
  return out;
}

RegimeClassification classify(const Real& a, const StepLengths& st,
                              const PrecisionContext& ctx) {
  ensure_finite(a, "classify");
  if (!(a > 0)) throw domain_error("classify: a must be positive");
  auto scope = ctx.activate();
  Real aa = round_to_working(a);

  Real d2 = delta_squared(aa, st, ctx);
  Real prod = aa * st.r0() * st.r1() * st.r2();

  SingularitySets ss = singularity_sets(st, ctx);
  Real tol = pow2(-static_cast<long>(ctx.bits() / 2));
  if (aa > 1) tol *= aa;
  for (const Real& b : ss.s)
    if (abs(aa - b) <= tol)
      return {Regime::kDivergent, d2, prod, b};

  Real vals[4] = {aa, st.r0(), st.r1(), st.r2()};
  std::sort(std::begin(vals), std::end(vals), [](const Real& x, const Real& y) { return x > y; });
  if (vals[0] > vals[1] + vals[2] + vals[3])
    return {Regime::kOutsideSupport, d2, prod, std::nullopt};

  if (d2 < 0) {
    // Inside the support Delta^2 >= 0 up to rounding; clamp noise, reject
    // anything larger as an internal inconsistency.
    Real scale = 1 + aa + st.sum();
    Real noise = pow2(-static_cast<long>(ctx.bits()) + 8) * scale * scale * scale * scale;
    if (abs(d2) > noise)
      throw internal_error("classify: negative Delta^2 inside the support");
    d2 = 0;
  }

  if (d2 > prod) return {Regime::kDeltaDominates, d2, prod, std::nullopt};
  if (d2 < prod) return {Regime::kProductDominates, d2, prod, std::nullopt};
  return {Regime::kBoundary, d2, prod, std::nullopt};
}

Real integral(const Real& a, const StepLengths& st, const PrecisionContext& ctx) {
  auto scope = ctx.activate();
  RegimeClassification cls = classify(a, st, ctx);
  switch (cls.tag) {
    case Regime::kOutsideSupport:
      return Real(0);
    case Regime::kDivergent:
      throw divergence_error("ramble integral diverges at a = b in S; b = " +
                                 cls.singularity->str(17),
                             cls.singularity->convert_to<double>());
    case Regime::kBoundary:
      // Delta^2 == a r0 r1 r2 cannot occur off S; refuse to evaluate K(1).
      throw divergence_error(
          "ramble integral: modulus tie Delta^2 == a r0 r1 r2 at a = " +
              round_to_working(a).str(17),
          a.convert_to<double>());
    case Regime::kDeltaDominates: {
      Real delta = sqrt(cls.delta_squared);
      Real modulus = sqrt(cls.product) / delta;
      Real value = sf::elliptic_k(modulus, ctx) / (const_pi() * const_pi() * delta);
      ensure_finite(value, "ramble integral");
      return value;
    }
    case Regime::kProductDominates: {
      Real root = sqrt(cls.product);
      Real modulus = sqrt(cls.delta_squared) / root;
      Real value = sf::elliptic_k(modulus, ctx) / (const_pi() * const_pi() * root);
      ensure_finite(value, "ramble integral");
      return value;
    }
  }
  throw internal_error("classify returned an unknown regime");
}

Real density(const Real& a, const StepLengths& st, const PrecisionContext& ctx) {
  auto scope = ctx.activate();
  return round_to_working(a) * integral(a, st, ctx);
}

Real log_singularity_coefficient(const Real& b, const StepLengths& st,
                                 const std::vector<Real>& offsets,
                                 const PrecisionContext& ctx) {
  auto scope = ctx.activate();
  SingularitySets ss = singularity_sets(st, ctx);

  const Real* hit = nullptr;
  Real tol = pow2(-static_cast<long>(ctx.bits() / 2));
  if (b > 1) tol *= b;
  for (const Real& s : ss.s)
    if (abs(b - s) <= tol) hit = &s;
  if (!hit) throw domain_error("log_singularity_coefficient: b is not in S");
  Real bb = *hit;

  if (offsets.size() < 3)
    throw domain_error("log_singularity_coefficient: need at least 3 offsets");
  Real nearest = -1;
  for (const Real& p : ss.s_star) {
    if (abs(p - bb) <= tol) continue;
    Real d = abs(p - bb);
    if (nearest < 0 || d < nearest) nearest = d;
  }
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    if (!(offsets[i] > 0))
      throw domain_error("log_singularity_coefficient: offsets must be positive");
    if (i > 0 && !(offsets[i] < offsets[i - 1]))
      throw domain_error("log_singularity_coefficient: offsets must decrease strictly");
    if (!(offsets[i] < nearest))
      throw domain_error(
          "log_singularity_coefficient: offset reaches a neighboring S* point");
  }

  std::vector<Real> values;
  values.reserve(offsets.size());
  for (const Real& eps : offsets)
    values.push_back(integral(Real(bb + eps), st, ctx));

  std::vector<Real> alphas;
  for (std::size_t i = 0; i + 1 < values.size(); ++i)
    alphas.push_back((values[i] - values[i + 1]) /
                     (log(offsets[i + 1]) - log(offsets[i])));

  const Real& last = alphas.back();
  const Real& prev = alphas[alphas.size() - 2];
  if (!(abs(last - prev) <= abs(last) / 100))
    throw estimation_error(
        "log_singularity_coefficient: estimates did not stabilize to 1%");
  return last;
}

DensityCurve sample_density_curve(const StepLengths& st, unsigned points_per_interval,
                                  const Real& exclusion_radius,
                                  const PrecisionContext& ctx) {
  if (!(exclusion_radius > 0))
    throw domain_error("sample_density_curve: exclusion radius must be positive");
  auto scope = ctx.activate();
  SingularitySets ss = singularity_sets(st, ctx);
  Real tol = pow2(-static_cast<long>(ctx.bits() / 2));

  auto near_divergence = [&](const Real& a) {
    for (const Real& b : ss.s) {
      Real guard = exclusion_radius;
      Real mtol = abs(a) > 1 ? Real(tol * a) : tol;
      if (guard < mtol) guard = mtol;
      if (abs(a - b) < guard) return true;
    }
    return false;
  };

  DensityCurve curve;
  Real diff = st.small_diff();
  if (diff > 0) curve.rows.emplace_back(diff, density(diff, st, ctx));

  for (std::size_t i = 0; i + 1 < ss.s_star.size(); ++i) {
    const Real& lo = ss.s_star[i];
    const Real& hi = ss.s_star[i + 1];
    Real h = (hi - lo) / (points_per_interval + 1);
    for (unsigned p = 1; p <= points_per_interval; ++p) {
      Real a = lo + h * p;
      if (!(a > 0) || near_divergence(a)) continue;
      curve.rows.emplace_back(a, density(a, st, ctx));
    }
  }

  curve.rows.emplace_back(st.sum(), density(st.sum(), st, ctx));
  return curve;
}

std::string to_csv(const DensityCurve& curve, unsigned significant_digits) {
  std::ostringstream out;
  out << "a,p3\n";
  for (const auto& [a, p3] : curve.rows)
    out << a.str(significant_digits) << ',' << p3.str(significant_digits) << '\n';
  return out.str();
}

}  // namespace mahler::ramble
