#include "qstar/schwarz.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qstar/error.hpp"

namespace qstar {

namespace {

bool is_unit(cplx g) { return std::abs(std::abs(g) - 1.0) <= kUnitModulusTolerance; }

void require_disk(cplx v, const char* name) {
  if (!(std::abs(v) <= 1.0 + kSchurTolerance)) {
    throw Error(ErrorCode::OutOfRange, std::string(name) + " must lie in the closed unit disk");
  }
}

}  // namespace

void SchurParams::validate() const {
  for (std::size_t k = 0; k < gammas.size(); ++k) {
    if (!(std::abs(gammas[k]) <= 1.0 + kSchurTolerance)) {
      throw Error(ErrorCode::InvalidParams,
                  "Schur parameter " + std::to_string(k) + " lies outside the unit disk",
                  static_cast<int>(k));
    }
  }
}

SchurParams SchurParams::effective() const {
  SchurParams out;
  for (cplx g : gammas) {
    out.gammas.push_back(g);
    if (is_unit(g)) break;
  }
  return out;
}

SchwarzSeries SchwarzSeries::from_raw(PowerSeries series, SchwarzProvenance provenance) {
  if (series[0] != cplx{}) {
    throw Error(ErrorCode::InvalidSchwarz, "Schwarz function must vanish at 0");
  }
  if (std::abs(series.coeff(1)) > 1.0 + kSchurTolerance) {
    throw Error(ErrorCode::InvalidSchwarz, "|b1| exceeds 1");
  }
  return SchwarzSeries(std::move(series), provenance);
}

CaratheodorySeries CaratheodorySeries::from_raw(PowerSeries series) {
  if (series[0] != cplx{1.0}) {
    throw Error(ErrorCode::InvalidParams, "Caratheodory function must satisfy p(0) = 1");
  }
  if (std::abs(series.coeff(1)) > 2.0 + 1e-9) {
    throw Error(ErrorCode::InvalidParams, "|p1| exceeds 2");
  }
  return CaratheodorySeries(std::move(series));
}

SchwarzSeries schur_expand(const SchurParams& params, int order) {
  if (order < 1) throw Error(ErrorCode::OutOfRange, "schur_expand needs order >= 1");
  params.validate();
  const SchurParams chain = params.effective();
  const PowerSeries z = PowerSeries::monomial(order, 1);

  // Innermost first: the last parameter is a constant Schur function.
  PowerSeries phi(order);
  if (!chain.gammas.empty()) {
    phi = PowerSeries::constant(order, chain.gammas.back());
    for (auto it = chain.gammas.rbegin() + 1; it != chain.gammas.rend(); ++it) {
      const cplx g = *it;
      const PowerSeries w = z * phi;
      const PowerSeries num = PowerSeries::constant(order, g) + w;
      const PowerSeries den = PowerSeries::constant(order, 1.0) + std::conj(g) * w;
      phi = divide(num, den);
    }
  }
  return SchwarzSeries::from_raw(multiply_by_z(phi), SchwarzProvenance::schur);
}

SchwarzTail parametric_b2_b3(double b1, cplx x, cplx y) {
  if (!(b1 >= -kSchurTolerance && b1 <= 1.0 + kSchurTolerance)) {
    throw Error(ErrorCode::OutOfRange, "b1 must lie in [0, 1]");
  }
  require_disk(x, "x");
  require_disk(y, "y");
  const double s = 1.0 - b1 * b1;
  const double nx = std::norm(x);
  return {x * s, s * ((1.0 - nx) * y - b1 * x * x)};
}

CaratheodorySeries to_caratheodory(const SchwarzSeries& omega) {
  const int n = omega.order();
  const PowerSeries one = PowerSeries::constant(n, 1.0);
  return CaratheodorySeries::from_raw(divide(one + omega.series(), one - omega.series()));
}

SchwarzSeries to_schwarz(const CaratheodorySeries& p) {
  const int n = p.series().order();
  const PowerSeries one = PowerSeries::constant(n, 1.0);
  const PowerSeries w = divide(p.series() - one, p.series() + one);
  // p - 1 vanishes exactly at 0; pin the quotient's constant term to match.
  std::vector<cplx> c(w.coeffs().begin(), w.coeffs().end());
  c[0] = 0.0;
  return SchwarzSeries::from_raw(PowerSeries(n, std::move(c)), SchwarzProvenance::raw);
}

PowerSeries caratheodory_convert(ConvertDirection direction, const PowerSeries& s) {
  if (direction == ConvertDirection::schwarz_to_caratheodory) {
    return to_caratheodory(SchwarzSeries::from_raw(s)).series();
  }
  return to_schwarz(CaratheodorySeries::from_raw(s)).series();
}

CaratheodoryTail libera_zlotkiewicz(double p1, cplx x, cplx y) {
  if (!(p1 >= 0.0 && p1 <= 2.0)) throw Error(ErrorCode::OutOfRange, "p1 must lie in [0, 2]");
  require_disk(x, "x");
  require_disk(y, "y");
  const double t = 4.0 - p1 * p1;
  const cplx p2 = 0.5 * (p1 * p1 + x * t);
  const cplx p3 = 0.25 * (p1 * p1 * p1 + 2.0 * t * p1 * x - p1 * t * x * x +
                          2.0 * t * (1.0 - std::norm(x)) * y);
  return {p2, p3};
}

SchwarzSeries canonical_schwarz(CanonicalKind kind, cplx param, int order) {
  if (order < 1) throw Error(ErrorCode::OutOfRange, "canonical_schwarz needs order >= 1");
  switch (kind) {
    case CanonicalKind::identity:
      return SchwarzSeries::from_raw(PowerSeries::monomial(order, 1), SchwarzProvenance::canonical);
    case CanonicalKind::x_zsquared:
      require_disk(param, "x");
      return SchwarzSeries::from_raw(PowerSeries::monomial(order, 2, param),
                                     SchwarzProvenance::canonical);
    case CanonicalKind::blaschke_remark: {
      const double b1 = param.real();
      if (!(b1 >= 0.0 && b1 <= 1.0)) throw Error(ErrorCode::OutOfRange, "b1 must lie in [0, 1]");
      const PowerSeries num(order, {0.0, -b1, 1.0});
      const PowerSeries den(order, {-1.0, b1});
      return SchwarzSeries::from_raw(divide(num, den), SchwarzProvenance::canonical);
    }
  }
  throw Error(ErrorCode::UnknownId, "unknown canonical Schwarz kind");
}

SchurTestResult schur_test(const PowerSeries& omega) {
  if (std::abs(omega[0]) >= kInnerTolerance) {
    throw Error(ErrorCode::InvalidSchwarz, "schur_test needs omega(0) = 0");
  }
  SchurTestResult result;
  // phi = omega / z has order - 1 trustworthy coefficients.
  std::vector<cplx> cur(omega.coeffs().begin() + 1, omega.coeffs().end());

  while (!cur.empty()) {
    const cplx g = cur[0];
    result.params.gammas.push_back(g);
    result.margin = std::min(result.margin, 1.0 - std::abs(g));
    if (std::abs(g) > 1.0 + kUnitModulusTolerance) break;
    if (is_unit(g)) {
      result.terminated = true;
      double residual = 0.0;
      for (std::size_t k = 1; k < cur.size(); ++k) residual = std::max(residual, std::abs(cur[k]));
      if (residual > 1e-9) result.margin = std::min(result.margin, -residual);
      break;
    }
    // phi_next = (phi - g) / (z (1 - conj(g) phi))
    const int m = static_cast<int>(cur.size()) - 2;
    if (m < 0) break;
    std::vector<cplx> num(cur.begin() + 1, cur.end());
    std::vector<cplx> den(cur.begin(), cur.end() - 1);
    for (auto& d : den) d = -std::conj(g) * d;
    den[0] += 1.0;
    const PowerSeries next = divide(PowerSeries(m, std::move(num)), PowerSeries(m, std::move(den)));
    cur.assign(next.coeffs().begin(), next.coeffs().end());
  }
  return result;
}

SchwarzSeries rotate(const SchwarzSeries& omega, double theta) {
  std::vector<cplx> c(omega.series().coeffs().begin(), omega.series().coeffs().end());
  for (std::size_t n = 1; n < c.size(); ++n) c[n] *= std::polar(1.0, static_cast<double>(n) * theta);
  c[0] = 0.0;
  return SchwarzSeries::from_raw(PowerSeries(omega.order(), std::move(c)), omega.provenance());
}

}  // namespace qstar
