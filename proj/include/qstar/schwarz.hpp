#pragma once

// Schwarz functions (analytic self-maps of the disk fixing 0) and
// Caratheodory functions (p(0) = 1, Re p > 0), with the constructive
// parameterizations used throughout the coefficient analysis.

#include <vector>

#include "qstar/series.hpp"

namespace qstar {

inline constexpr double kSchurTolerance = 1e-12;
/// |gamma| within this distance of 1 ends the Schur chain.
inline constexpr double kUnitModulusTolerance = 1e-10;
/// schur_test accepts margins at or above this value.
inline constexpr double kSchurMarginThreshold = -1e-9;

/// Schur parameters gamma_0, gamma_1, ... with |gamma_k| <= 1.
struct SchurParams {
  std::vector<cplx> gammas;

  /// Throws InvalidParams if some |gamma_k| > 1 + tol.
  void validate() const;
  /// Parameters up to and including the first unit-modulus entry.
  SchurParams effective() const;
};

enum class SchwarzProvenance { schur, canonical, raw };

class SchwarzSeries {
 public:
  /// Validates c_0 == 0 and |c_1| <= 1 + tol; throws InvalidSchwarz otherwise.
  static SchwarzSeries from_raw(PowerSeries series,
                                SchwarzProvenance provenance = SchwarzProvenance::raw);

  const PowerSeries& series() const noexcept { return series_; }
  SchwarzProvenance provenance() const noexcept { return provenance_; }
  int order() const noexcept { return series_.order(); }
  cplx b(int n) const noexcept { return series_.coeff(n); }

 private:
  SchwarzSeries(PowerSeries s, SchwarzProvenance p) : series_(std::move(s)), provenance_(p) {}
  PowerSeries series_;
  SchwarzProvenance provenance_;
};

class CaratheodorySeries {
 public:
  /// Validates c_0 == 1 and |c_1| <= 2 + 1e-9; throws InvalidParams otherwise.
  static CaratheodorySeries from_raw(PowerSeries series);

  const PowerSeries& series() const noexcept { return series_; }
  cplx p(int n) const noexcept { return series_.coeff(n); }

 private:
  explicit CaratheodorySeries(PowerSeries s) : series_(std::move(s)) {}
  PowerSeries series_;
};

/// omega(z) = z * phi(z) with phi = tau_{g0}(z tau_{g1}(z tau_{g2}(...))),
/// tau_g(w) = (g + w) / (1 + conj(g) w). A unit-modulus parameter makes the
/// remaining chain constant, so later entries are ignored.
SchwarzSeries schur_expand(const SchurParams& params, int order = kDefaultOrder);

struct SchwarzTail {
  cplx b2;
  cplx b3;
};

/// b2 = x (1 - b1^2),  b3 = (1 - b1^2) ((1 - |x|^2) y - b1 x^2).
SchwarzTail parametric_b2_b3(double b1, cplx x, cplx y);

CaratheodorySeries to_caratheodory(const SchwarzSeries& omega);
SchwarzSeries to_schwarz(const CaratheodorySeries& p);

enum class ConvertDirection { schwarz_to_caratheodory, caratheodory_to_schwarz };

/// Moebius transform p = (1 + w)/(1 - w) or its inverse w = (p - 1)/(p + 1),
/// on raw series. The class invariants of the input are checked.
PowerSeries caratheodory_convert(ConvertDirection direction, const PowerSeries& s);

struct CaratheodoryTail {
  cplx p2;
  cplx p3;
};

/// Libera-Zlotkiewicz form of p2, p3 in terms of a real p1 in [0, 2].
/// p1 = 0 is accepted as the boundary case.
CaratheodoryTail libera_zlotkiewicz(double p1, cplx x, cplx y);

enum class CanonicalKind {
  identity,         // z
  x_zsquared,       // x z^2, |x| <= 1
  blaschke_remark,  // z (z - b1) / (b1 z - 1), b1 in [0, 1]
};

/// Named closed-form Schwarz functions. `param` is x for x_zsquared and b1
/// (real part used) for blaschke_remark; ignored for identity.
///
/// The alternative form z (2z - p1)/(p1 z - 2) with p1 = 2 b1 is the same
/// rational function as blaschke_remark, so it has no separate kind.
SchwarzSeries canonical_schwarz(CanonicalKind kind, cplx param = 0.0,
                                int order = kDefaultOrder);

struct SchurTestResult {
  SchurParams params;
  /// 1 - max |gamma_k|, lowered further by any nonzero residual left after a
  /// unit-modulus parameter terminated the chain.
  double margin = 1.0;
  bool terminated = false;

  bool accepted() const noexcept { return margin >= kSchurMarginThreshold; }
};

/// Runs the Schur algorithm on phi = omega / z. On truncated data this is a
/// necessary condition for membership in the Schwarz class, not a proof.
SchurTestResult schur_test(const PowerSeries& omega);
inline SchurTestResult schur_test(const SchwarzSeries& omega) { return schur_test(omega.series()); }

/// omega(e^{i theta} z): coefficients b_n e^{i n theta}.
SchwarzSeries rotate(const SchwarzSeries& omega, double theta);

}  // namespace qstar
