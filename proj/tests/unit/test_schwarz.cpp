#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qstar/error.hpp"
#include "qstar/rng.hpp"
#include "qstar/schwarz.hpp"
#include "support.hpp"

using namespace qstar;
using testing::close_abs;

namespace {

SchurParams random_params(CounterRng& rng, int length) {
  SchurParams p;
  for (int k = 0; k < length; ++k) p.gammas.push_back(rng.unit_disk());
  return p;
}

/// b2, b3 obtained by converting Libera-Zlotkiewicz p2, p3 back to omega.
SchwarzTail tail_through_caratheodory(double b1, cplx x, cplx y) {
  const double p1 = 2.0 * b1;
  const CaratheodoryTail p = libera_zlotkiewicz(p1, x, y);
  const PowerSeries omega =
      caratheodory_convert(ConvertDirection::caratheodory_to_schwarz, PowerSeries(3, {1.0, p1, p.p2, p.p3}));
  CHECK(std::abs(omega[1] - b1) <= 1e-12);
  return {omega[2], omega[3]};
}

}  // namespace

TEST_CASE("schur_expand builds the expected Schwarz functions") {
  const SchwarzSeries id = schur_expand({{1.0}}, 16);
  CHECK(id.series() == PowerSeries::monomial(16, 1));
  CHECK(id.provenance() == SchwarzProvenance::schur);

  const cplx x(0.3, -0.4);
  const SchwarzSeries s = schur_expand({{0.0, x}}, 8);
  CHECK(s.b(1) == 0.0);
  CHECK(close_abs(s.b(2), x, 1e-15));
  CHECK(close_abs(s.b(3), 0.0, 1e-15));

  const SchwarzSeries t = schur_expand({{0.5, -1.0, 0.3}}, 8);
  CHECK(close_abs(t.b(1), 0.5, 1e-15));
  CHECK(close_abs(t.b(2), -0.75, 1e-15));
  CHECK(close_abs(t.b(3), -0.375, 1e-15));
  // The same finite Blaschke product as the closed form for x = -1.
  const SchwarzSeries blaschke = canonical_schwarz(CanonicalKind::blaschke_remark, 0.5, 8);
  for (int n = 0; n <= 8; ++n) CHECK(close_abs(t.b(n), blaschke.b(n), 1e-14));

  CHECK_THROWS_AS(schur_expand({{0.2, cplx(1.0, 0.1)}}, 8), Error);
}

TEST_CASE("parametric b2, b3") {
  const SchwarzTail one = parametric_b2_b3(1.0, cplx(0.3, 0.2), cplx(-0.5, 0.1));
  CHECK(one.b2 == 0.0);
  CHECK(one.b3 == 0.0);
  const SchwarzTail zero = parametric_b2_b3(0.0, cplx(0.3, 0.2), cplx(-0.5, 0.1));
  CHECK(zero.b2 == cplx(0.3, 0.2));
  CHECK(close_abs(zero.b3, (1.0 - 0.13) * cplx(-0.5, 0.1), 1e-15));
  const SchwarzTail half = parametric_b2_b3(0.5, -1.0, 0.7);
  CHECK(close_abs(half.b2, -0.75, 1e-15));
  CHECK(close_abs(half.b3, -0.375, 1e-15));
  CHECK_THROWS_AS(parametric_b2_b3(1.5, 0.0, 0.0), Error);
  CHECK_THROWS_AS(parametric_b2_b3(0.5, cplx(1.0, 1.0), 0.0), Error);
}

TEST_CASE("parameterizations agree") {
  CounterRng rng(2024, 0);
  for (int i = 0; i < 1000; ++i) {
    const double b1 = rng.uniform();
    const cplx x = rng.unit_disk();
    const cplx y = rng.unit_disk();
    const SchwarzTail direct = parametric_b2_b3(b1, x, y);

    const SchwarzSeries chain = schur_expand({{b1, x, y}}, 6);
    CHECK(close_abs(chain.b(2), direct.b2, 1e-12));
    CHECK(close_abs(chain.b(3), direct.b3, 1e-12));

    const SchwarzTail via_p = tail_through_caratheodory(b1, x, y);
    CHECK(close_abs(via_p.b2, direct.b2, 1e-12));
    CHECK(close_abs(via_p.b3, direct.b3, 1e-12));
  }
}

TEST_CASE("Caratheodory conversion") {
  const CaratheodorySeries p = to_caratheodory(canonical_schwarz(CanonicalKind::identity, 0.0, 6));
  CHECK(p.p(0) == 1.0);
  for (int n = 1; n <= 6; ++n) CHECK(close_abs(p.p(n), 2.0, 1e-15));

  CHECK(to_caratheodory(SchwarzSeries::from_raw(PowerSeries(5))).series() == PowerSeries::constant(5, 1.0));

  // p1 = 2 b1, p2 = 2 (b2 + b1^2), p3 = 2 (b3 + 2 b1 b2 + b1^3).
  const PowerSeries q =
      caratheodory_convert(ConvertDirection::schwarz_to_caratheodory, PowerSeries(3, {0.0, 0.5, -0.75, -0.375}));
  CHECK(close_abs(q[1], 1.0, 1e-15));
  CHECK(close_abs(q[2], -1.0, 1e-15));
  CHECK(close_abs(q[3], -2.0, 1e-15));

  const PowerSeries back = caratheodory_convert(ConvertDirection::caratheodory_to_schwarz, q);
  CHECK(back[0] == 0.0);
  CHECK(close_abs(back[1], 0.5, 1e-15));
  CHECK(close_abs(back[2], -0.75, 1e-15));
  CHECK(close_abs(back[3], -0.375, 1e-15));

  CHECK_THROWS_AS(caratheodory_convert(ConvertDirection::caratheodory_to_schwarz, PowerSeries(3, {1.0, 2.5})), Error);
  CHECK_THROWS_AS(caratheodory_convert(ConvertDirection::schwarz_to_caratheodory, PowerSeries(3, {0.1, 0.5})), Error);
}

TEST_CASE("Libera-Zlotkiewicz form") {
  const CaratheodoryTail edge = libera_zlotkiewicz(2.0, cplx(0.4, 0.3), cplx(-0.2, 0.9));
  CHECK(edge.p2 == 2.0);
  CHECK(edge.p3 == 2.0);

  for (double p1 : {0.0, 0.7, 1.3, 2.0}) {
    const CaratheodoryTail r = libera_zlotkiewicz(p1, -1.0, cplx(0.3, 0.3));
    CHECK(close_abs(r.p2, p1 * p1 - 2.0, 1e-15));
  }

  // 2 p2 = 1 + 3 x, 4 p3 = 1 + 6 x - 3 x^2 at p1 = 1, y = 0.
  const CaratheodoryTail r = libera_zlotkiewicz(1.0, 0.5, 0.0);
  CHECK(close_abs(r.p2, 1.25, 1e-15));
  CHECK(close_abs(r.p3, 0.8125, 1e-15));

  CHECK_THROWS_AS(libera_zlotkiewicz(2.1, 0.0, 0.0), Error);
}

TEST_CASE("canonical Schwarz functions") {
  CHECK(canonical_schwarz(CanonicalKind::identity, 0.0, 5).series() == PowerSeries::monomial(5, 1));
  const SchwarzSeries xz2 = canonical_schwarz(CanonicalKind::x_zsquared, cplx(0.0, 1.0), 5);
  CHECK(xz2.series() == PowerSeries::monomial(5, 2, cplx(0.0, 1.0)));

  // z (z - 1/2) / (z/2 - 1) = z/2 - 3 z^2/4 - 3 z^3/8 - ...
  const SchwarzSeries b = canonical_schwarz(CanonicalKind::blaschke_remark, 0.5, 6);
  CHECK(close_abs(b.b(1), 0.5, 1e-15));
  CHECK(close_abs(b.b(2), -0.75, 1e-15));
  CHECK(close_abs(b.b(3), -0.375, 1e-15));
  for (double t = 0.0; t < 2.0 * std::numbers::pi; t += 0.1) {
    const cplx z = std::polar(0.5, t);
    const cplx exact = z * (z - 0.5) / (0.5 * z - 1.0);
    CHECK(std::abs(evaluate(b.series(), z) - exact) <= 1e-3);
  }
  CHECK_THROWS_AS(canonical_schwarz(CanonicalKind::x_zsquared, 1.5, 5), Error);
}

TEST_CASE("Schur test") {
  const SchurTestResult id = schur_test(canonical_schwarz(CanonicalKind::identity, 0.0, 8));
  REQUIRE(id.params.gammas.size() == 1);
  CHECK(id.params.gammas[0] == 1.0);
  CHECK(id.margin == 0.0);
  CHECK(id.terminated);
  CHECK(id.accepted());

  const SchurTestResult t = schur_test(schur_expand({{0.5, -1.0, 0.3}}, 12));
  REQUIRE(t.params.gammas.size() == 2);
  CHECK(close_abs(t.params.gammas[0], 0.5, 1e-12));
  CHECK(close_abs(t.params.gammas[1], -1.0, 1e-12));
  CHECK(t.terminated);
  CHECK(std::abs(t.margin) <= 1e-12);

  const SchurTestResult twice = schur_test(PowerSeries(8, {0.0, 2.0}));
  CHECK(twice.margin == -1.0);
  CHECK_FALSE(twice.accepted());

  // |gamma_0| = 1 with a nonzero remainder is not a Schwarz function.
  const SchurTestResult bad = schur_test(PowerSeries(8, {0.0, 1.0, 0.5}));
  CHECK_FALSE(bad.accepted());

  CHECK_THROWS_AS(schur_test(PowerSeries(8, {0.1, 0.5})), Error);
}

TEST_CASE("Schur round trip on random parameters") {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    CounterRng rng(99, i);
    const int length = 1 + static_cast<int>(i % 5);
    SchurParams params = random_params(rng, length);
    if (i % 7 == 0 && length > 1) params.gammas[static_cast<std::size_t>(length / 2)] = std::polar(1.0, rng.uniform(0.0, 6.0));
    const SchurParams expected = params.effective();

    const SchurTestResult r = schur_test(schur_expand(params, 32));
    CHECK(r.accepted());
    REQUIRE(r.params.gammas.size() >= expected.gammas.size());
    for (std::size_t k = 0; k < expected.gammas.size(); ++k) {
      CHECK(close_abs(r.params.gammas[k], expected.gammas[k], 1e-9));
    }
    for (std::size_t k = expected.gammas.size(); k < r.params.gammas.size(); ++k) {
      CHECK(std::abs(r.params.gammas[k]) <= 1e-9);
    }
  }
}

TEST_CASE("constructed Schwarz functions stay inside the disk") {
  constexpr int N = 32;
  std::vector<SchwarzSeries> family{
      canonical_schwarz(CanonicalKind::identity, 0.0, N),
      canonical_schwarz(CanonicalKind::x_zsquared, cplx(0.6, -0.8), N),
  };
  for (double b1 : {0.0, 0.25, 0.5, 0.9, 1.0}) family.push_back(canonical_schwarz(CanonicalKind::blaschke_remark, b1, N));
  for (std::uint64_t i = 0; i < 200; ++i) {
    CounterRng rng(7, i);
    family.push_back(schur_expand(random_params(rng, 1 + static_cast<int>(i % 5)), N));
  }
  for (const SchwarzSeries& w : family) {
    double worst = 0.0;
    for (int k = 0; k < 360; ++k) {
      worst = std::max(worst, std::abs(evaluate(w.series(), std::polar(0.9, 2.0 * std::numbers::pi * k / 360.0))));
    }
    CHECK(worst <= 1.0 + 1e-6);
  }
}

TEST_CASE("rotation of Schwarz functions") {
  const SchwarzSeries w = schur_expand({{0.4, cplx(0.2, 0.5), -0.3}}, 16);
  const double theta = 0.7;
  const SchwarzSeries r = rotate(w, theta);
  for (int n = 1; n <= 16; ++n) CHECK(close_abs(r.b(n), w.b(n) * std::polar(1.0, n * theta), 1e-15));
  const cplx z(0.3, -0.2);
  CHECK(close_abs(evaluate(r.series(), z), evaluate(w.series(), std::polar(1.0, theta) * z), 1e-14));
}

TEST_CASE("class invariants of raw series") {
  CHECK_THROWS_AS(SchwarzSeries::from_raw(PowerSeries(4, {0.1, 0.5})), Error);
  CHECK_THROWS_AS(SchwarzSeries::from_raw(PowerSeries(4, {0.0, 1.1})), Error);
  CHECK_NOTHROW(SchwarzSeries::from_raw(PowerSeries(4, {0.0, 1.0})));
  CHECK_THROWS_AS(CaratheodorySeries::from_raw(PowerSeries(4, {0.9, 1.0})), Error);
  SchurParams bad{{0.5, cplx(0.0, 1.1)}};
  try {
    bad.validate();
    FAIL("expected InvalidParams");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidParams);
    CHECK(e.index() == 1);
  }
}
