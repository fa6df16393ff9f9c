// Acceptance checks. Prints one line per criterion and exits nonzero if any
// criterion fails. Reference values are computed here from closed
// expressions, independently of the library routines under test.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "qstar/bounds.hpp"
#include "qstar/rng.hpp"
#include "qstar/schwarz.hpp"
#include "qstar/search.hpp"
#include "qstar/starlike.hpp"

using namespace qstar;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b))); }
double rel_diff(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b))); }

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

// 1: recursion, truncated product and product formula agree.
Outcome extremal_three_ways() {
  Outcome o;
  double worst = 0.0;
  for (double q : {0.3, 0.5, 0.7, 0.9}) {
    const ClassParams p = ClassParams::real(q);
    const StarlikeFunction rec = coeffs_from_schwarz(canonical_schwarz(CanonicalKind::identity, 0.0, 12), p, 12);
    const StarlikeFunction prod = extremal_product(p, 12);
    for (int n = 1; n <= 12; ++n) {
      const cplx f = extremal_coeff_formula(p, n);
      worst = std::max({worst, rel_diff(rec.a(n), prod.a(n)), rel_diff(rec.a(n), f), rel_diff(prod.a(n), f)});
    }
  }
  o.require(worst <= 1e-9, fmt("worst relative disagreement %.3g", worst));
  return o;
}

// 2: coefficient bounds attained by the extremal and approached by the grid.
Outcome coefficient_bounds() {
  Outcome o;
  const StarlikeFunction f = coeffs_from_schwarz(canonical_schwarz(CanonicalKind::identity, 0.0, 4),
                                                 ClassParams::real(0.5), 4);
  const double expected[] = {4.0, 40.0 / 3.0, 880.0 / 21.0};
  const FunctionalId ids[] = {FunctionalId::abs_a2, FunctionalId::abs_a3, FunctionalId::abs_a4};
  for (int k = 0; k < 3; ++k) {
    const double bound = bound_value({ids[k], ClassParams::real(0.5)});
    o.require(std::abs(std::abs(f.a(k + 2)) - expected[k]) <= 1e-12 * expected[k], fmt("|a%g| = %.17g", k + 2.0, std::abs(f.a(k + 2))));
    o.require(std::abs(bound - expected[k]) <= 1e-12 * expected[k], fmt("bound for a%g = %.17g", k + 2.0, bound));
  }
  for (FunctionalId id : {FunctionalId::abs_a3, FunctionalId::abs_a4}) {
    const SearchResult r = maximize_functional({id, 0.5, GridSpec::standard(), 0.0, B1Slice::full});
    o.require(r.gap <= 1e-2 && r.gap >= -1e-9, fmt("grid gap %.3g for ", r.gap) + std::string(to_string(id)));
  }
  return o;
}

// 3: Hankel family on both b1 slices.
Outcome hankel_suite() {
  Outcome o;
  for (double q : {0.5, 0.8}) {
    for (FunctionalId id : {FunctionalId::fekete_a2a3_a4, FunctionalId::h1_2, FunctionalId::h2_2}) {
      const SearchResult r = maximize_functional({id, q, GridSpec::standard(), 0.0, B1Slice::full});
      o.require(r.gap <= 1e-2 && r.gap >= -1e-9,
                std::string(to_string(id)) + fmt(" at q=%g: gap %.3g", q, r.gap));
    }
    const SearchResult zero = maximize_functional({FunctionalId::h2_2, q, GridSpec::standard(), 0.0, B1Slice::zero_only});
    const double target = 4.0 / (q * q * (1.0 + q) * (1.0 + q));
    o.require(zero.gap <= 1e-2 && zero.gap >= -1e-9, fmt("h2_2 b1=0 slice at q=%g: gap %.3g", q, zero.gap));
    o.require(std::abs(zero.max_value - target) <= 1e-6, fmt("h2_2 b1=0 slice %.17g vs %.17g", zero.max_value, target));
    o.require(std::abs(std::abs(zero.argmax.x) - 1.0) <= 1e-6, fmt("argmax |x| = %.17g", std::abs(zero.argmax.x)));
  }
  return o;
}

// 4: the two-case H_2^(2) bounds differ by a positive h(q) that vanishes at 1.
Outcome two_case_gap() {
  Outcome o;
  const auto h_lib = [](double q) {
    return functional_bound(FunctionalId::h2_2, q, CaseFlag::a2_nonzero) - functional_bound(FunctionalId::h2_2, q, CaseFlag::a2_zero);
  };
  const auto h_ref = [](double q) {
    const double s = (1.0 + q) * (1.0 + q);
    return 4.0 * (2.0 + q) / (q * q * s * (1.0 + q + q * q)) - 4.0 / (q * q * s);
  };
  for (int i = 0; i < 1000; ++i) {
    const double q = 0.001 + (0.999 - 0.001) * (i + 0.5) / 1000.0;
    const double h = h_lib(q);
    o.require(h > 0.0, fmt("h(%g) = %.3g", q, h));
    o.require(rel_diff(h, h_ref(q)) <= 1e-9, fmt("h(%g) library %.17g", q, h));
  }
  const double end = h_lib(1.0 - 1e-8);
  o.require(end < 1e-6, fmt("h(1 - 1e-8) = %.3g", end));
  return o;
}

// 5: q -> 1 limits of the bound catalog.
Outcome q_to_one_limits() {
  Outcome o;
  const double q = 1.0 - 1e-6;
  const std::pair<double, double> checks[] = {
      {functional_bound(FunctionalId::abs_a2, q), 2.0},
      {functional_bound(FunctionalId::abs_a3, q), 3.0},
      {functional_bound(FunctionalId::abs_a4, q), 4.0},
      {functional_bound(FunctionalId::fekete_a2a3_a4, q), 2.0},
      {functional_bound(FunctionalId::h2_2, q, CaseFlag::a2_nonzero), 1.0},
      {functional_bound(FunctionalId::t1_2, q), 5.0},
      {functional_bound(FunctionalId::t2_2, q), 13.0},
      {functional_bound(FunctionalId::t3_2, q), 25.0},
      {functional_bound(FunctionalId::t1_3, q), 24.0},
      {functional_bound(FunctionalId::t2_3, q, CaseFlag::a2_nonzero), 84.0},
  };
  for (const auto& [value, limit] : checks) {
    o.require(std::abs(value - limit) <= 1e-4 * limit, fmt("%.17g vs limit %g", value, limit));
  }
  return o;
}

// 6: the pi/2-rotated extremal meets the Toeplitz bounds.
Outcome toeplitz_rotation() {
  Outcome o;
  for (double q : {0.5, 0.8}) {
    const StarlikeFunction f = extremal_product(ClassParams::real(q), 4);
    const double a2 = f.a(2).real(), a3 = f.a(3).real(), a4 = f.a(4).real();
    const std::pair<FunctionalId, double> ids[] = {
        {FunctionalId::t1_2, 1.0 + a2 * a2},
        {FunctionalId::t2_2, a2 * a2 + a3 * a3},
        {FunctionalId::t3_2, a3 * a3 + a4 * a4},
        {FunctionalId::t1_3, 1.0 + 2.0 * a2 * a2 + a3 * (2.0 * a2 * a2 - a3)},
    };
    for (const auto& [id, identity] : ids) {
      const double bound = functional_bound(id, q);
      const double achieved = rotated_extremal_value(id, q, std::numbers::pi / 2.0);
      o.require(rel_diff(achieved, bound) <= 1e-9,
                std::string(to_string(id)) + fmt(" at q=%g: achieved %.17g", q, achieved));
      o.require(rel_diff(identity, bound) <= 1e-9, std::string(to_string(id)) + fmt(" identity %.17g at q=%g", identity, q));
    }
  }
  return o;
}

// 7: Y functional, the H_2^(2) triple and the Prokhorov-Szynal instances.
Outcome lemma_kit() {
  Outcome o;
  CounterRng rng(2024, 0);
  double lo = 0.0, hi = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double a = rng.uniform(-10.0, 10.0);
    const double b = rng.uniform(-10.0, 10.0);
    const double c = std::copysign(rng.uniform(0.0, 10.0), a);
    const double d = y_closed(a, b, c) - y_oracle(a, b, c, 256, 720);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  o.require(lo >= -1e-12 && hi <= 5e-3, fmt("y_closed - y_oracle in [%.3g, %.3g]", lo, hi));

  for (int i = 1; i <= 50; ++i) {
    for (int j = 1; j <= 50; ++j) {
      const double q = i / 51.0;
      const double b1 = j / 51.0;
      const HankelYTriple t = hankel_y_triple(q, b1);
      const double r = 1.0 - b1 * b1;
      const double s = (1.0 + q) * (1.0 + q);
      const double simplified = (1.0 - q) * b1 / ((1.0 + q) * r) + (1.0 + q + q * q) / (b1 * r * s);
      const double sum = std::abs(t.a) + std::abs(t.b) + std::abs(t.c);
      o.require(std::abs(sum - t.y) <= 1e-12 * std::max(1.0, t.y), fmt("|a|+|b|+|c| vs y at q=%g, b1=%g", q, b1));
      o.require(std::abs(simplified - t.y) <= 1e-12 * std::max(1.0, t.y), fmt("simplified y at q=%g, b1=%g", q, b1));
      o.require(std::abs(t.b) >= 2.0 * (1.0 - std::abs(t.c)), fmt("branch condition at q=%g, b1=%g", q, b1));
    }
  }

  std::vector<ProkhorovPair> pairs;
  for (double q : {0.2, 0.5, 0.8}) {
    pairs.push_back(a4_prokhorov_pair(q));
    pairs.push_back(fekete_prokhorov_pair(q));
  }
  for (const ProkhorovPair& p : pairs) o.require(d1_region(p.mu, p.nu), fmt("(%g, %g) outside D1", p.mu, p.nu));
  CounterRng fuzz(2024, 1);
  double worst = -1.0;
  for (int i = 0; i < 100000; ++i) {
    const double b1 = fuzz.uniform();
    const SchwarzTail t = parametric_b2_b3(b1, fuzz.unit_disk(), fuzz.unit_disk());
    const ProkhorovPair& p = pairs[static_cast<std::size_t>(i) % pairs.size()];
    worst = std::max(worst, prokhorov_functional(b1, t.b2, t.b3, p.mu, p.nu) - std::abs(p.nu));
  }
  o.require(worst <= 1e-12, fmt("Prokhorov functional exceeds |nu| by %.3g", worst));
  return o;
}

// 8: randomized checks for complex zeta and alpha.
Outcome complex_zeta_suite() {
  Outcome o;
  const cplx zetas[] = {std::polar(0.6, std::numbers::pi / 4.0), cplx(0.0, 0.9), cplx(-0.5, 0.0)};
  for (cplx zeta : zetas) {
    for (double alpha : {0.0, 0.25}) {
      const VerificationReport r = random_schwarz_suite(ClassParams(zeta, alpha), 11, 10000, 5, 8);
      for (const ReportItem& item : r.items) {
        o.require(item.violations == 0, item.name + fmt(" has violations at zeta=%g%+gi", zeta.real(), zeta.imag()));
      }
    }
  }
  const VerificationReport real = random_schwarz_suite(ClassParams::real(0.5), 11, 1000, 5, 8);
  bool equality = false;
  for (const ReportItem& item : real.items) {
    o.require(item.violations == 0, item.name + " has violations at zeta=0.5");
    if (item.name == "an_product_equality") equality = item.verdict == Verdict::attained;
  }
  o.require(equality, "omega = z does not attain the product bound at zeta = 0.5");
  return o;
}

// 9: membership margin of the extremal function and of a non-member.
Outcome membership() {
  Outcome o;
  for (double q : {0.5, 0.8}) {
    const MembershipResult r = membership_margin(extremal_product(ClassParams::real(q), 64));
    o.require(r.margin >= -1e-6, fmt("extremal margin %.3g at q=%g", r.margin, q));
  }
  const StarlikeFunction bad = StarlikeFunction::from_raw(PowerSeries(64, {0.0, 1.0, 10.0}), ClassParams::real(0.5));
  const MembershipResult r = membership_margin(bad);
  o.require(r.margin < 0.0, fmt("z + 10z^2 margin %.3g", r.margin));
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* description;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "extremal coefficients agree across recursion, product and formula", 1.0, extremal_three_ways},
      {2, "coefficient bounds attained by the extremal and by the grid search", 120.0, coefficient_bounds},
      {3, "Hankel family attained on both b1 slices", 0.0, hankel_suite},
      {4, "two-case H_2^(2) gap positive and vanishing at q = 1", 0.0, two_case_gap},
      {5, "q -> 1 limits of the bound catalog", 0.0, q_to_one_limits},
      {6, "pi/2-rotated extremal attains the Toeplitz bounds", 0.0, toeplitz_rotation},
      {7, "Y functional, H_2^(2) triple and Prokhorov-Szynal instances", 0.0, lemma_kit},
      {8, "randomized complex-zeta suite has no violations", 60.0, complex_zeta_suite},
      {9, "membership margin separates the extremal from z + 10z^2", 0.0, membership},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("threw: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.ok && c.budget_seconds > 0.0 && seconds > c.budget_seconds) {
      outcome.ok = false;
      outcome.detail = fmt("took %.2fs, budget %.0fs", seconds, c.budget_seconds);
    }
    std::printf("[%s] %d %s (%.2fs)%s%s\n", outcome.ok ? "PASS" : "FAIL", c.number, c.description, seconds,
                outcome.ok ? "" : ": ", outcome.detail.c_str());
    if (!outcome.ok) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
