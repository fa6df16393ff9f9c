#pragma once

// Truncated complex power series and the q-calculus operators built on them.
//
// A PowerSeries of order N stores exactly N+1 coefficients c_0..c_N. Every
// operation truncates at N; operands of binary operations must share N.

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace qstar {

using cplx = std::complex<double>;

inline constexpr int kDefaultOrder = 32;
inline constexpr double kDivisorTolerance = 1e-12;
inline constexpr double kInnerTolerance = 1e-14;

class PowerSeries {
 public:
  /// Zero series of the given order.
  explicit PowerSeries(int order = kDefaultOrder);
  /// Coefficients beyond `order` are dropped, missing ones are zero.
  PowerSeries(int order, std::vector<cplx> coeffs);
  PowerSeries(int order, std::initializer_list<cplx> coeffs);

  static PowerSeries constant(int order, cplx c);
  static PowerSeries monomial(int order, int power, cplx c = 1.0);
  /// 1 + z + z^2 + ... + z^N
  static PowerSeries geometric(int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }

  /// Coefficient of z^k; zero for k outside [0, order].
  cplx coeff(int k) const noexcept {
    return (k < 0 || k > order()) ? cplx{} : coeffs_[static_cast<std::size_t>(k)];
  }
  cplx operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }

  /// Re-truncates (or zero-pads) to a new order.
  PowerSeries with_order(int order) const;

  PowerSeries operator-() const;
  PowerSeries& operator*=(cplx s);

  friend PowerSeries operator+(const PowerSeries& f, const PowerSeries& g);
  friend PowerSeries operator-(const PowerSeries& f, const PowerSeries& g);
  friend PowerSeries operator*(const PowerSeries& f, const PowerSeries& g);
  friend PowerSeries operator*(cplx s, PowerSeries f) { return f *= s; }

  bool operator==(const PowerSeries&) const = default;

 private:
  std::vector<cplx> coeffs_;
};

enum class SeriesOp { add, sub, mul, reciprocal, divide };

/// Dispatcher over the arithmetic operations; `g` is ignored for reciprocal.
PowerSeries series_arith(SeriesOp op, const PowerSeries& f, const PowerSeries* g = nullptr);

PowerSeries reciprocal(const PowerSeries& f);
PowerSeries divide(const PowerSeries& num, const PowerSeries& den);

/// outer(inner(z)); inner must vanish at 0.
PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner);

/// Coefficient-wise product.
PowerSeries hadamard(const PowerSeries& f, const PowerSeries& g);

/// f(z)/z. The constant term of f is discarded; the top coefficient of the
/// result is zero.
PowerSeries divide_by_z(const PowerSeries& f);

/// z*f(z), truncated.
PowerSeries multiply_by_z(const PowerSeries& f);

/// [n]_zeta = 1 + zeta + ... + zeta^(n-1), summed directly so that zeta = 1
/// is exact.
cplx q_number(int n, cplx zeta);

/// Expansion of z/((1 - zeta z)(1 - z)); its n-th coefficient is [n]_zeta.
PowerSeries q_kernel(int order, cplx zeta);

/// D_zeta f: the coefficient of z^(n-1) is [n]_zeta * c_n. The constant term
/// of f is ignored.
PowerSeries q_difference(const PowerSeries& f, cplx zeta);

/// Horner evaluation of the truncated polynomial.
cplx evaluate(const PowerSeries& f, cplx z);

/// The class parameters (zeta, alpha) with |zeta| <= 1 and 0 <= alpha < 1.
class ClassParams {
 public:
  ClassParams(cplx zeta, double alpha);
  static ClassParams real(double q) { return ClassParams(q, 0.0); }

  cplx zeta() const noexcept { return zeta_; }
  double alpha() const noexcept { return alpha_; }
  /// True when zeta is a real number in (0,1) and alpha == 0.
  bool is_real_q() const noexcept;

 private:
  cplx zeta_;
  double alpha_;
};

}  // namespace qstar
