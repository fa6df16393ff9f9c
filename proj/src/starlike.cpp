#include "qstar/starlike.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "qstar/error.hpp"

namespace qstar {

namespace {

constexpr double kDegenerateTolerance = 1e-12;

void require_positive_order(int order) {
  if (order < 1) throw Error(ErrorCode::OutOfRange, "order must be at least 1");
}

/// Textbook complex product. The factor loop near |zeta| = 1 runs tens of
/// millions of times, and std::complex's inf/nan recovery path dominates it.
inline cplx mul(cplx a, cplx b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

[[noreturn]] void throw_degenerate(int n) {
  throw Error(ErrorCode::DegenerateDivisor, "[" + std::to_string(n) + "]_zeta equals 1", n);
}

}  // namespace

StarlikeFunction StarlikeFunction::from_raw(PowerSeries series, ClassParams params,
                                            StarlikeSource source) {
  if (series.order() < 1 || series[0] != cplx{} || series[1] != cplx{1.0}) {
    throw Error(ErrorCode::PreconditionViolated, "starlike function needs f(0) = 0 and f'(0) = 1");
  }
  return StarlikeFunction(std::move(series), params, source);
}

StarlikeFunction coeffs_from_schwarz(const SchwarzSeries& omega, const ClassParams& params,
                                     int order) {
  require_positive_order(order);
  if (order > omega.order()) {
    throw Error(ErrorCode::PreconditionViolated,
                "omega is truncated at order " + std::to_string(omega.order()));
  }
  const cplx zeta = params.zeta();
  // Check every divisor up front so the failure names the first bad n.
  std::vector<cplx> bracket(static_cast<std::size_t>(order) + 1);
  for (int n = 1; n <= order; ++n) {
    bracket[static_cast<std::size_t>(n)] = q_number(n, zeta);
    if (n >= 2 && std::abs(bracket[static_cast<std::size_t>(n)] - 1.0) <= kDegenerateTolerance) {
      throw_degenerate(n);
    }
  }
  if (!schur_test(omega).accepted()) {
    throw Error(ErrorCode::InvalidSchwarz, "omega fails the Schur test");
  }

  const double shift = 1.0 - 2.0 * params.alpha();
  std::vector<cplx> a(static_cast<std::size_t>(order) + 1);
  a[1] = 1.0;
  for (int n = 2; n <= order; ++n) {
    cplx rhs = 0.0;
    for (int k = 1; k < n; ++k) {
      rhs += omega.b(n - k) * (shift + bracket[static_cast<std::size_t>(k)]) *
             a[static_cast<std::size_t>(k)];
    }
    a[static_cast<std::size_t>(n)] = rhs / (bracket[static_cast<std::size_t>(n)] - 1.0);
  }
  return StarlikeFunction::from_raw(PowerSeries(order, std::move(a)), params,
                                    StarlikeSource::recursion);
}

InitialCoeffs initial_coeffs_closed(cplx b1, cplx b2, cplx b3, double q) {
  if (!(q > 0.0 && q < 1.0)) throw Error(ErrorCode::OutOfRange, "q must lie in (0, 1)");
  const double q2 = q * q;
  const double q3 = q2 * q;
  const cplx a2 = 2.0 * b1 / q;
  const cplx a3 = (2.0 * b2 * q + 4.0 * b1 * b1 + 2.0 * b1 * b1 * q) / (q2 * (1.0 + q));
  const cplx a4 = (2.0 * q2 * (1.0 + q) * b3 + 4.0 * q * (2.0 + 2.0 * q + q2) * b1 * b2 +
                   2.0 * (4.0 + 4.0 * q + 3.0 * q2 + q3) * b1 * b1 * b1) /
                  (q3 * (1.0 + q) * (1.0 + q + q2));
  return {a2, a3, a4};
}

int extremal_product_factor_count(cplx zeta) {
  const double m = std::abs(zeta);
  if (!(m > 0.0 && m < 1.0)) throw Error(ErrorCode::OutOfRange, "extremal product needs 0 < |zeta| < 1");
  // smallest K with |zeta|^K (2 + |zeta|) < 1e-16
  const double k = std::log(1e-16 / (2.0 + m)) / std::log(m);
  return static_cast<int>(std::floor(k)) + 1;
}

StarlikeFunction extremal_product(const ClassParams& params, int order) {
  require_positive_order(order);
  if (params.alpha() != 0.0) {
    throw Error(ErrorCode::PreconditionViolated, "the product form describes alpha = 0 only");
  }
  const cplx zeta = params.zeta();
  const int last = extremal_product_factor_count(zeta);

  std::vector<cplx> f(static_cast<std::size_t>(order) + 1);
  f[1] = 1.0;
  cplx zeta_k = 1.0;             // zeta^k
  cplx pole = (2.0 - zeta) / zeta;  // zeta^(k-1) (2 - zeta)
  for (int k = 0; k <= last; ++k) {
    // times (1 - zeta^k z)
    for (int n = order; n >= 1; --n) f[static_cast<std::size_t>(n)] -= mul(zeta_k, f[static_cast<std::size_t>(n - 1)]);
    // divided by (1 - pole z)
    for (int n = 1; n <= order; ++n) f[static_cast<std::size_t>(n)] += mul(pole, f[static_cast<std::size_t>(n - 1)]);
    zeta_k = mul(zeta_k, zeta);
    pole = mul(pole, zeta);
  }
  return StarlikeFunction::from_raw(PowerSeries(order, std::move(f)), params,
                                    StarlikeSource::product);
}

cplx extremal_coeff_formula(const ClassParams& params, int n) {
  if (n < 1) throw Error(ErrorCode::OutOfRange, "n must be at least 1");
  const double shift = 1.0 - 2.0 * params.alpha();
  cplx product = 1.0;
  for (int k = 2; k <= n; ++k) {
    const cplx den = q_number(k, params.zeta()) - 1.0;
    if (std::abs(den) <= kDegenerateTolerance) throw_degenerate(k);
    product *= (shift + q_number(k - 1, params.zeta())) / den;
  }
  return product;
}

StarlikeFunction rotate(const StarlikeFunction& f, double theta) {
  std::vector<cplx> c(f.series().coeffs().begin(), f.series().coeffs().end());
  for (std::size_t n = 2; n < c.size(); ++n) {
    c[n] *= std::polar(1.0, static_cast<double>(n - 1) * theta);
  }
  return StarlikeFunction::from_raw(PowerSeries(f.order(), std::move(c)), f.params(), f.source());
}

double trusted_radius(const PowerSeries& f, cplx zeta, double r_max, double tolerance) {
  double r = r_max;
  const int top = f.order();
  for (int n = std::max(1, top - 3); n <= top; ++n) {
    const double term = std::max(std::abs(f[n]), std::abs(q_number(n, zeta) * f[n]));
    if (term > tolerance) r = std::min(r, std::pow(tolerance / term, 1.0 / n));
  }
  return r;
}

MembershipResult membership_margin(const StarlikeFunction& f, const MembershipGrid& grid) {
  if (!(grid.r_max > 0.0 && grid.r_max < 1.0)) {
    throw Error(ErrorCode::OutOfRange, "r_max must lie in (0, 1)");
  }
  if (grid.radial_steps < 1 || grid.angular_steps < 1) {
    throw Error(ErrorCode::OutOfRange, "grid resolution must be positive");
  }
  const cplx zeta = f.params().zeta();
  const PowerSeries over_z = divide_by_z(f.series());
  const PowerSeries diff = q_difference(f.series(), zeta);

  MembershipResult result;
  result.effective_radius = trusted_radius(f.series(), zeta, grid.r_max, grid.tail_tolerance);
  result.margin = std::numeric_limits<double>::infinity();

  auto sample = [&](cplx z) {
    // z D f / f = D f / (f / z), which stays finite at z = 0.
    const cplx den = evaluate(over_z, z);
    if (std::abs(den) < 1e-12) {
      throw Error(ErrorCode::DenominatorVanished,
                  "f(z)/z vanishes at z = " + std::to_string(z.real()) + "+" +
                      std::to_string(z.imag()) + "i");
    }
    const double value = (evaluate(diff, z) / den).real() - f.params().alpha();
    if (value < result.margin) {
      result.margin = value;
      result.argmin = z;
    }
  };

  sample(0.0);
  for (int j = 1; j <= grid.radial_steps; ++j) {
    const double r = result.effective_radius * j / grid.radial_steps;
    for (int k = 0; k < grid.angular_steps; ++k) {
      sample(std::polar(r, 2.0 * std::numbers::pi * k / grid.angular_steps));
    }
  }
  return result;
}

}  // namespace qstar
