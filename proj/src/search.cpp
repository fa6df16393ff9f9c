#include "qstar/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qstar/error.hpp"
#include "qstar/kernels.hpp"
#include "qstar/rng.hpp"
#include "qstar/schwarz.hpp"
#include "qstar/starlike.hpp"

namespace qstar {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kZoom = 5.0;

struct Polar {
  double r = 0.0;
  double angle = 0.0;
};

/// n evenly spaced values on [lo, hi], both ends included.
std::vector<double> closed_range(double lo, double hi, int n) {
  if (n == 1 || hi <= lo) return {lo};
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = lo + (hi - lo) * j / (n - 1);
  v.back() = hi;
  return v;
}

std::vector<double> unit_interval_window(double center, double half, int n) {
  if (half >= 0.5) return closed_range(0.0, 1.0, n);
  return closed_range(std::max(0.0, center - half), std::min(1.0, center + half), n);
}

std::vector<double> angle_window(double center, double half, int n) {
  std::vector<double> v;
  if (half >= std::numbers::pi) {
    v.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = kTwoPi * k / n;
    return v;
  }
  for (double a : closed_range(center - half, center + half, n)) {
    a = std::fmod(a, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    v.push_back(a);
  }
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

/// Radius-major, angle-minor; the origin appears once.
std::vector<Polar> disk_points(const std::vector<double>& radii, const std::vector<double>& angles) {
  std::vector<Polar> pts;
  pts.reserve(radii.size() * angles.size());
  for (double r : radii) {
    if (r == 0.0) {
      pts.push_back({0.0, 0.0});
      continue;
    }
    for (double a : angles) pts.push_back({r, a});
  }
  return pts;
}

struct Incumbent {
  double value = -std::numeric_limits<double>::infinity();
  double b1 = 0.0;
  Polar x;
  Polar y;
};

bool two_case(FunctionalId id) { return id == FunctionalId::h2_2 || id == FunctionalId::t2_3; }

double bound_for(FunctionalId id, double q, B1Slice slice) {
  return functional_bound(id, q, two_case(id) ? std::optional(slice_case(slice)) : std::nullopt);
}

double direct_value(FunctionalId id, double q, double theta, const SearchPoint& p) {
  const SchwarzTail tail = parametric_b2_b3(p.b1, p.x, p.y);
  const InitialCoeffs c = initial_coeffs_closed(p.b1, tail.b2, tail.b3, q);
  return named_functional(id, c.a2 * std::polar(1.0, theta), c.a3 * std::polar(1.0, 2.0 * theta),
                          c.a4 * std::polar(1.0, 3.0 * theta));
}

Verdict classify(double gap, double attain_tol) {
  if (gap < -kViolationTolerance) return Verdict::violation;
  return gap <= attain_tol ? Verdict::attained : Verdict::consistent;
}

}  // namespace

void GridSpec::validate() const {
  if (b1_points < 2 || x_radii < 2 || y_radii < 2) {
    throw Error(ErrorCode::InvalidParams, "b1 and radius grids need at least both endpoints");
  }
  if (x_angles < 1 || y_angles < 1 || refinement_levels < 0) {
    throw Error(ErrorCode::InvalidParams, "angle counts must be positive and refinement non-negative");
  }
}

GridSpec parse_grid(std::string_view name) {
  if (name == "coarse") return GridSpec::coarse();
  if (name == "default") return GridSpec::standard();
  if (name == "fine") return GridSpec::fine();
  throw Error(ErrorCode::UnknownId, "unknown grid '" + std::string(name) + "'");
}

CaseFlag slice_case(B1Slice slice) {
  return slice == B1Slice::zero_only ? CaseFlag::a2_zero : CaseFlag::a2_nonzero;
}

SearchResult maximize_functional(const SearchSpec& spec) {
  spec.grid.validate();
  const double q = spec.q;
  const double bound = bound_for(spec.functional, q, spec.slice);
  const GridSpec& g = spec.grid;
  const bool uses_y = depends_on_a4(spec.functional);
  const cplx e1 = std::polar(1.0, spec.rotation_theta);
  const cplx e2 = std::polar(1.0, 2.0 * spec.rotation_theta);
  const cplx e3 = std::polar(1.0, 3.0 * spec.rotation_theta);
  // d a4 / d b3
  const double a4_per_b3 = 2.0 / (q * (1.0 + q + q * q));

  Incumbent best;
  std::int64_t evaluations = 0;
  std::vector<double> y_re;
  std::vector<double> y_im;

  for (int level = 0; level <= g.refinement_levels; ++level) {
    const double scale = std::pow(kZoom, -level);
    const double half_unit = 0.5 * scale;
    const double half_angle = std::numbers::pi * scale;

    const std::vector<double> b1s = spec.slice == B1Slice::zero_only
                                        ? std::vector<double>{0.0}
                                        : unit_interval_window(best.b1, half_unit, g.b1_points);
    const std::vector<Polar> xs = disk_points(unit_interval_window(best.x.r, half_unit, g.x_radii),
                                              angle_window(best.x.angle, half_angle, g.x_angles));
    const std::vector<Polar> ys = disk_points(unit_interval_window(best.y.r, half_unit, g.y_radii),
                                              angle_window(best.y.angle, half_angle, g.y_angles));
    y_re.resize(ys.size());
    y_im.resize(ys.size());
    for (std::size_t j = 0; j < ys.size(); ++j) {
      y_re[j] = ys[j].r * std::cos(ys[j].angle);
      y_im[j] = ys[j].r * std::sin(ys[j].angle);
    }

    for (double b1 : b1s) {
      const double s = 1.0 - b1 * b1;
      for (const Polar& xp : xs) {
        const cplx x = std::polar(xp.r, xp.angle);
        // b1 = 1 forces b2 = b3 = 0, so every x gives the same value.
        const cplx b2 = x * s;
        const cplx b3_at_y0 = -s * b1 * x * x;
        const InitialCoeffs c = initial_coeffs_closed(b1, b2, b3_at_y0, q);
        const cplx a2 = c.a2 * e1;
        const cplx a3 = c.a3 * e2;
        const cplx a4 = c.a4 * e3;
        const cplx slope = a4_per_b3 * s * (1.0 - xp.r * xp.r) * e3;

        const QuadraticInA4 f = functional_in_a4(spec.functional, a2, a3);
        const cplx d0 = f.c0 + a4 * (f.c1 + a4 * f.c2);
        const cplx d1 = (f.c1 + 2.0 * f.c2 * a4) * slope;
        const cplx d2 = f.c2 * slope * slope;

        double value = 0.0;
        std::size_t at = 0;
        if (!uses_y || slope == 0.0) {
          value = std::abs(d0);
          ++evaluations;
        } else {
          const kernels::QuadraticForm form{d0.real(), d0.imag(), d1.real(), d1.imag(),
                                            d2.real(), d2.imag(), 0.0};
          const kernels::ArgMax m = kernels::max_quadratic_modulus(form, y_re, y_im);
          value = m.value;
          at = m.index;
          evaluations += static_cast<std::int64_t>(ys.size());
        }
        if (value > best.value) best = {value, b1, xp, ys[at]};
        if (s == 0.0) break;
      }
    }
  }

  SearchResult result;
  result.argmax = {best.b1, std::polar(best.x.r, best.x.angle), std::polar(best.y.r, best.y.angle)};
  result.max_value = direct_value(spec.functional, q, spec.rotation_theta, result.argmax);
  result.bound = bound;
  result.gap = bound - result.max_value;
  result.evaluations = evaluations;
  return result;
}

double rotated_extremal_value(FunctionalId id, double q, double theta) {
  const ClassParams params = ClassParams::real(q);
  const cplx a2 = extremal_coeff_formula(params, 2) * std::polar(1.0, theta);
  const cplx a3 = extremal_coeff_formula(params, 3) * std::polar(1.0, 2.0 * theta);
  const cplx a4 = extremal_coeff_formula(params, 4) * std::polar(1.0, 3.0 * theta);
  return named_functional(id, a2, a3, a4);
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::attained: return "attained";
    case Verdict::consistent: return "consistent";
    case Verdict::violation: return "VIOLATION";
    case Verdict::skipped: return "skipped";
  }
  return "unknown";
}

bool VerificationReport::has_violation() const {
  return std::any_of(items.begin(), items.end(),
                     [](const ReportItem& i) { return i.verdict == Verdict::violation; });
}

namespace {

/// Accumulates lhs <= rhs checks for one report item, keeping the observation
/// with the smallest relative slack.
class InequalityTally {
 public:
  InequalityTally(std::string name, const ClassParams& params, std::string method) {
    item_.name = std::move(name);
    item_.zeta = params.zeta();
    item_.alpha = params.alpha();
    item_.method = std::move(method);
  }

  void begin_sample(std::int64_t index) {
    ++item_.samples;
    sample_ = index;
    sample_failed_ = false;
  }

  void skip_sample() {
    ++item_.samples;
    ++item_.skipped;
  }

  void observe(double lhs, double rhs) {
    const double scale = std::max(1.0, std::abs(rhs));
    const double slack = (rhs - lhs) / scale;
    if (slack < worst_) {
      worst_ = slack;
      item_.bound = rhs;
      item_.achieved = lhs;
      item_.gap = rhs - lhs;
    }
    if (lhs > rhs + kViolationTolerance * scale && !sample_failed_) {
      sample_failed_ = true;
      ++item_.violations;
      item_.violating_samples.push_back(sample_);
    }
  }

  ReportItem finish() {
    if (item_.violations > 0) {
      item_.verdict = Verdict::violation;
    } else if (item_.samples == item_.skipped) {
      item_.verdict = Verdict::skipped;
    } else {
      item_.verdict = Verdict::consistent;
    }
    return item_;
  }

 private:
  ReportItem item_;
  double worst_ = std::numeric_limits<double>::infinity();
  std::int64_t sample_ = 0;
  bool sample_failed_ = false;
};

SchwarzSeries suite_sample(std::int64_t index, std::uint64_t seed, int depth, int order) {
  if (index == 0) return SchwarzSeries::from_raw(PowerSeries(order));
  if (index == 1) return canonical_schwarz(CanonicalKind::identity, 0.0, order);
  CounterRng rng(seed, static_cast<std::uint64_t>(index));
  SchurParams params;
  params.gammas.reserve(static_cast<std::size_t>(depth));
  for (int k = 0; k < depth; ++k) params.gammas.push_back(rng.unit_disk());
  return schur_expand(params, order);
}

}  // namespace

VerificationReport random_schwarz_suite(const ClassParams& params, std::uint64_t seed, int count,
                                        int depth, int order) {
  if (count < 0 || depth < 1 || order < 2) {
    throw Error(ErrorCode::InvalidParams, "need count >= 0, depth >= 1 and order >= 2");
  }
  const cplx zeta = params.zeta();
  const double shift = 1.0 - 2.0 * params.alpha();
  const bool product_applies = hypothesis_check(params, order);

  std::vector<double> lhs_weight(static_cast<std::size_t>(order) + 1);
  std::vector<double> rhs_weight(static_cast<std::size_t>(order) + 1);
  for (int k = 1; k <= order; ++k) {
    const cplx bracket = q_number(k, zeta);
    lhs_weight[static_cast<std::size_t>(k)] = std::norm(bracket - 1.0);
    rhs_weight[static_cast<std::size_t>(k)] = std::norm(shift + bracket);
  }
  std::vector<double> product(static_cast<std::size_t>(order) + 1, 0.0);
  if (product_applies) {
    for (int n = 2; n <= order; ++n) {
      product[static_cast<std::size_t>(n)] = bound_value({AuxBound::an_product, params, n, std::nullopt, {}});
    }
  }

  InequalityTally chain("chain_inequality", params, "random");
  InequalityTally parseval("parseval_rhs", params, "random");
  InequalityTally prod("an_product", params, "random");

  ReportItem equality;
  bool equality_checked = false;

  std::vector<double> abs_a(static_cast<std::size_t>(order) + 1);
  const std::int64_t total = static_cast<std::int64_t>(count) + 2;
  for (std::int64_t index = 0; index < total; ++index) {
    const SchwarzSeries omega = suite_sample(index, seed, depth, order);
    std::optional<StarlikeFunction> f;
    try {
      f = coeffs_from_schwarz(omega, params, order);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateDivisor) throw;
      chain.skip_sample();
      parseval.skip_sample();
      prod.skip_sample();
      continue;
    }
    for (int k = 1; k <= order; ++k) abs_a[static_cast<std::size_t>(k)] = std::abs(f->a(k));

    chain.begin_sample(index);
    double lhs = 0.0;
    double rhs = 0.0;
    for (int n = 1; n <= order; ++n) {
      const auto un = static_cast<std::size_t>(n);
      lhs += lhs_weight[un] * abs_a[un] * abs_a[un];
      chain.observe(lhs, rhs);
      rhs += rhs_weight[un] * abs_a[un] * abs_a[un];
    }

    parseval.begin_sample(index);
    for (int n = 2; n <= order; ++n) {
      const std::span<const double> prefix(abs_a.data() + 1, static_cast<std::size_t>(n - 1));
      parseval.observe(abs_a[static_cast<std::size_t>(n)], parseval_rhs(params, prefix, n));
    }

    if (!product_applies) {
      prod.skip_sample();
    } else {
      prod.begin_sample(index);
      for (int n = 2; n <= order; ++n) {
        prod.observe(abs_a[static_cast<std::size_t>(n)], product[static_cast<std::size_t>(n)]);
      }
    }

    if (index == 1 && params.is_real_q()) {
      // omega = z generates the extremal function, which meets the product
      // bound with equality at every n.
      equality_checked = true;
      equality.name = "an_product_equality";
      equality.zeta = zeta;
      equality.alpha = params.alpha();
      equality.method = "omega_z";
      equality.samples = 1;
      double worst = -1.0;
      for (int n = 2; n <= order; ++n) {
        const double b = product[static_cast<std::size_t>(n)];
        const double a = abs_a[static_cast<std::size_t>(n)];
        const double rel = std::abs(b - a) / b;
        if (rel > worst) {
          worst = rel;
          equality.bound = b;
          equality.achieved = a;
          equality.gap = b - a;
        }
      }
      if (worst > 1e-9) {
        equality.verdict = equality.gap < -kViolationTolerance * std::max(1.0, equality.bound)
                               ? Verdict::violation
                               : Verdict::consistent;
        if (equality.verdict == Verdict::violation) {
          equality.violations = 1;
          equality.violating_samples.push_back(1);
        }
      } else {
        equality.verdict = Verdict::attained;
      }
    }
  }

  VerificationReport report;
  report.seed = seed;
  report.items.push_back(chain.finish());
  report.items.push_back(parseval.finish());
  report.items.push_back(prod.finish());
  if (equality_checked) report.items.push_back(equality);
  return report;
}

VerificationReport sharpness_report(std::span<const double> q_list,
                                    std::span<const FunctionalId> functionals, const GridSpec& grid,
                                    double attain_tol) {
  VerificationReport report;
  const auto add = [&](FunctionalId id, double q, std::optional<CaseFlag> flag, std::string method,
                       double bound, double achieved, std::int64_t samples) {
    ReportItem item;
    item.name = std::string(to_string(id));
    item.zeta = q;
    item.case_label = flag ? std::string(to_string(*flag)) : std::string();
    item.method = std::move(method);
    item.bound = bound;
    item.achieved = achieved;
    item.gap = bound - achieved;
    item.verdict = classify(item.gap, attain_tol);
    item.samples = samples;
    if (item.verdict == Verdict::violation) item.violations = 1;
    report.items.push_back(std::move(item));
  };
  const auto grid_item = [&](FunctionalId id, double q, B1Slice slice) {
    const SearchResult r = maximize_functional({id, q, grid, 0.0, slice});
    const std::optional<CaseFlag> flag = two_case(id) ? std::optional(slice_case(slice)) : std::nullopt;
    add(id, q, flag, slice == B1Slice::zero_only ? "grid_b1_zero" : "grid", r.bound, r.max_value,
        r.evaluations);
  };

  for (double q : q_list) {
    if (!(q > 0.0 && q < 1.0)) throw Error(ErrorCode::OutOfRange, "q must lie in (0, 1)");
    for (FunctionalId id : functionals) {
      const auto form = determinant_form(id);
      if (form && form->kind == DeterminantKind::toeplitz) {
        // The Toeplitz bounds are met only at a specific coefficient phase,
        // which the real-b1 grid cannot reach; the rotated extremal can.
        const std::optional<CaseFlag> flag =
            two_case(id) ? std::optional(CaseFlag::a2_nonzero) : std::nullopt;
        add(id, q, flag, "rotated_extremal", functional_bound(id, q, flag),
            rotated_extremal_value(id, q, std::numbers::pi / 2.0), 1);
        if (two_case(id)) grid_item(id, q, B1Slice::zero_only);
        continue;
      }
      grid_item(id, q, B1Slice::full);
      if (two_case(id)) grid_item(id, q, B1Slice::zero_only);
    }
  }
  return report;
}

}  // namespace qstar
