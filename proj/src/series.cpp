#include "qstar/series.hpp"

#include <cmath>
#include <string>

#include "qstar/error.hpp"

namespace qstar {

namespace {

void require_same_order(const PowerSeries& f, const PowerSeries& g) {
  if (f.order() != g.order()) {
    throw Error(ErrorCode::OrderMismatch, "operands have orders " + std::to_string(f.order()) +
                                              " and " + std::to_string(g.order()));
  }
}

void require_order(int order) {
  if (order < 0) throw Error(ErrorCode::OutOfRange, "series order must be non-negative");
}

}  // namespace

PowerSeries::PowerSeries(int order) {
  require_order(order);
  coeffs_.assign(static_cast<std::size_t>(order) + 1, cplx{});
}

PowerSeries::PowerSeries(int order, std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  require_order(order);
  coeffs_.resize(static_cast<std::size_t>(order) + 1, cplx{});
}

PowerSeries::PowerSeries(int order, std::initializer_list<cplx> coeffs)
    : PowerSeries(order, std::vector<cplx>(coeffs)) {}

PowerSeries PowerSeries::constant(int order, cplx c) { return PowerSeries(order, {c}); }

PowerSeries PowerSeries::monomial(int order, int power, cplx c) {
  PowerSeries s(order);
  if (power >= 0 && power <= order) s.coeffs_[static_cast<std::size_t>(power)] = c;
  return s;
}

PowerSeries PowerSeries::geometric(int order) {
  return PowerSeries(order, std::vector<cplx>(static_cast<std::size_t>(order) + 1, 1.0));
}

PowerSeries PowerSeries::with_order(int order) const { return PowerSeries(order, coeffs_); }

PowerSeries PowerSeries::operator-() const {
  PowerSeries r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

PowerSeries& PowerSeries::operator*=(cplx s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) {
  require_same_order(f, g);
  PowerSeries r(f);
  for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] += g.coeffs_[k];
  return r;
}

PowerSeries operator-(const PowerSeries& f, const PowerSeries& g) {
  require_same_order(f, g);
  PowerSeries r(f);
  for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] -= g.coeffs_[k];
  return r;
}

PowerSeries operator*(const PowerSeries& f, const PowerSeries& g) {
  require_same_order(f, g);
  const int n = f.order();
  PowerSeries r(n);
  for (int i = 0; i <= n; ++i) {
    const cplx fi = f.coeffs_[static_cast<std::size_t>(i)];
    if (fi == cplx{}) continue;
    for (int j = 0; i + j <= n; ++j) {
      r.coeffs_[static_cast<std::size_t>(i + j)] += fi * g.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  return r;
}

PowerSeries divide(const PowerSeries& num, const PowerSeries& den) {
  require_same_order(num, den);
  const cplx d0 = den[0];
  if (std::abs(d0) <= kDivisorTolerance) {
    throw Error(ErrorCode::DivisorNearZero, "divisor constant term has modulus " +
                                                std::to_string(std::abs(d0)));
  }
  const int n = num.order();
  std::vector<cplx> q(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    cplx acc = num[k];
    for (int j = 1; j <= k; ++j) acc -= den[j] * q[static_cast<std::size_t>(k - j)];
    q[static_cast<std::size_t>(k)] = acc / d0;
  }
  return PowerSeries(n, std::move(q));
}

PowerSeries reciprocal(const PowerSeries& f) {
  return divide(PowerSeries::constant(f.order(), 1.0), f);
}

PowerSeries series_arith(SeriesOp op, const PowerSeries& f, const PowerSeries* g) {
  if (op == SeriesOp::reciprocal) return reciprocal(f);
  if (g == nullptr) throw Error(ErrorCode::PreconditionViolated, "binary operation needs two operands");
  switch (op) {
    case SeriesOp::add: return f + *g;
    case SeriesOp::sub: return f - *g;
    case SeriesOp::mul: return f * *g;
    case SeriesOp::divide: return divide(f, *g);
    case SeriesOp::reciprocal: break;
  }
  return reciprocal(f);
}

PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner) {
  require_same_order(outer, inner);
  if (std::abs(inner[0]) >= kInnerTolerance) {
    throw Error(ErrorCode::InnerNotVanishing, "inner series has nonzero constant term");
  }
  const int n = outer.order();
  // Horner: (((o_N) w + o_{N-1}) w + ...) w + o_0 with w = inner.
  PowerSeries acc = PowerSeries::constant(n, outer[n]);
  for (int k = n - 1; k >= 0; --k) {
    acc = acc * inner;
    acc = acc + PowerSeries::constant(n, outer[k]);
  }
  return acc;
}

PowerSeries hadamard(const PowerSeries& f, const PowerSeries& g) {
  require_same_order(f, g);
  std::vector<cplx> r(static_cast<std::size_t>(f.order()) + 1);
  for (int k = 0; k <= f.order(); ++k) r[static_cast<std::size_t>(k)] = f[k] * g[k];
  return PowerSeries(f.order(), std::move(r));
}

PowerSeries divide_by_z(const PowerSeries& f) {
  std::vector<cplx> r(static_cast<std::size_t>(f.order()) + 1);
  for (int k = 1; k <= f.order(); ++k) r[static_cast<std::size_t>(k - 1)] = f[k];
  return PowerSeries(f.order(), std::move(r));
}

PowerSeries multiply_by_z(const PowerSeries& f) {
  std::vector<cplx> r(static_cast<std::size_t>(f.order()) + 1);
  for (int k = 1; k <= f.order(); ++k) r[static_cast<std::size_t>(k)] = f[k - 1];
  return PowerSeries(f.order(), std::move(r));
}

cplx q_number(int n, cplx zeta) {
  if (n < 1) throw Error(ErrorCode::OutOfRange, "q_number needs n >= 1");
  cplx sum = 0.0;
  cplx power = 1.0;
  for (int j = 0; j < n; ++j) {
    sum += power;
    power *= zeta;
  }
  return sum;
}

PowerSeries q_kernel(int order, cplx zeta) {
  const PowerSeries den = PowerSeries(order, {1.0, -zeta}) * PowerSeries(order, {1.0, -1.0});
  return divide(PowerSeries::monomial(order, 1), den);
}

PowerSeries q_difference(const PowerSeries& f, cplx zeta) {
  std::vector<cplx> r(static_cast<std::size_t>(f.order()) + 1);
  cplx qn = 0.0;
  cplx power = 1.0;
  for (int n = 1; n <= f.order(); ++n) {
    qn += power;  // running [n]_zeta
    power *= zeta;
    r[static_cast<std::size_t>(n - 1)] = qn * f[n];
  }
  return PowerSeries(f.order(), std::move(r));
}

cplx evaluate(const PowerSeries& f, cplx z) {
  cplx acc = 0.0;
  for (int k = f.order(); k >= 0; --k) acc = acc * z + f[k];
  return acc;
}

ClassParams::ClassParams(cplx zeta, double alpha) : zeta_(zeta), alpha_(alpha) {
  if (!(std::abs(zeta) <= 1.0 + 1e-12)) {
    throw Error(ErrorCode::OutOfRange, "|zeta| must not exceed 1");
  }
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw Error(ErrorCode::OutOfRange, "alpha must lie in [0, 1)");
  }
}

bool ClassParams::is_real_q() const noexcept {
  return zeta_.imag() == 0.0 && zeta_.real() > 0.0 && zeta_.real() < 1.0 && alpha_ == 0.0;
}

}  // namespace qstar
