#pragma once

// Normalized functions f(z) = z + a_2 z^2 + ... in the zeta-starlike class of
// order alpha: Re(z D_zeta f / f) > alpha on the unit disk.

#include "qstar/schwarz.hpp"
#include "qstar/series.hpp"

namespace qstar {

enum class StarlikeSource { recursion, product, formula, raw };

class StarlikeFunction {
 public:
  /// Requires c_0 == 0 and c_1 == 1 exactly.
  static StarlikeFunction from_raw(PowerSeries series, ClassParams params,
                                   StarlikeSource source = StarlikeSource::raw);

  const PowerSeries& series() const noexcept { return series_; }
  const ClassParams& params() const noexcept { return params_; }
  StarlikeSource source() const noexcept { return source_; }
  int order() const noexcept { return series_.order(); }
  cplx a(int n) const noexcept { return series_.coeff(n); }

 private:
  StarlikeFunction(PowerSeries s, ClassParams p, StarlikeSource src)
      : series_(std::move(s)), params_(p), source_(src) {}
  PowerSeries series_;
  ClassParams params_;
  StarlikeSource source_;
};

/// Solves ([n] - 1) a_n = sum_{k<n} b_{n-k} ((1 - 2 alpha) + [k]) a_k with
/// a_1 = 1, where [k] = [k]_zeta. Throws DegenerateDivisor (index = n) at the
/// first n with [n]_zeta = 1, and InvalidSchwarz when omega fails schur_test.
StarlikeFunction coeffs_from_schwarz(const SchwarzSeries& omega, const ClassParams& params,
                                     int order = kDefaultOrder);

struct InitialCoeffs {
  cplx a2;
  cplx a3;
  cplx a4;
};

/// Closed forms of a_2, a_3, a_4 for real zeta = q in (0,1), alpha = 0.
InitialCoeffs initial_coeffs_closed(cplx b1, cplx b2, cplx b3, double q);

/// Truncation of z * prod_{k>=0} (1 - zeta^k z) / (1 - zeta^(k-1) (2 - zeta) z),
/// the function generated by omega(z) = z. Needs 0 < |zeta| < 1 and alpha = 0.
StarlikeFunction extremal_product(const ClassParams& params, int order = kDefaultOrder);

/// Number of factors extremal_product multiplies for this zeta.
int extremal_product_factor_count(cplx zeta);

/// prod_{k=2}^n ((1 - 2 alpha) + [k-1]) / ([k] - 1), the coefficient a_n of
/// the omega(z) = z function.
cplx extremal_coeff_formula(const ClassParams& params, int n);

/// e^{-i theta} f(e^{i theta} z): coefficients a_n e^{i (n-1) theta}.
StarlikeFunction rotate(const StarlikeFunction& f, double theta);

struct MembershipGrid {
  double r_max = 0.95;
  int radial_steps = 48;
  int angular_steps = 360;
  /// Sampling stops at the radius where the last retained terms |a_n| r^n
  /// drop below this value.
  double tail_tolerance = 1e-9;
};

struct MembershipResult {
  /// min Re(z D f / f) - alpha over the sampled grid.
  double margin = 0.0;
  /// Largest radius actually sampled (<= r_max).
  double effective_radius = 0.0;
  cplx argmin;
};

/// Radius below which every one of the last four retained terms satisfies
/// |[n] a_n| r^n <= tolerance, capped at r_max.
double trusted_radius(const PowerSeries& f, cplx zeta, double r_max, double tolerance);

/// Heuristic membership certificate over a polar grid: truncation plus a
/// finite grid means a non-negative margin is evidence, not proof. Radii are
/// capped at trusted_radius so the truncated series represents f.
MembershipResult membership_margin(const StarlikeFunction& f, const MembershipGrid& grid = {});

}  // namespace qstar
