#include <cmath>
#include <limits>

#include "qstar/kernels.hpp"

namespace qstar::kernels {

namespace {

// Keep in step with the vector variants: same operations, same order.
inline double point_value(const QuadraticForm& f, double zr, double zi) {
  const double tr = f.c1_re + (zr * f.c2_re - zi * f.c2_im);
  const double ti = f.c1_im + (zr * f.c2_im + zi * f.c2_re);
  const double vr = f.c0_re + (zr * tr - zi * ti);
  const double vi = f.c0_im + (zr * ti + zi * tr);
  const double modulus = std::sqrt(vr * vr + vi * vi);
  return modulus + f.disk_weight * (1.0 - (zr * zr + zi * zi));
}

}  // namespace

void evaluate_scalar(const QuadraticForm& form, std::span<const double> re,
                     std::span<const double> im, std::span<double> out) {
  for (std::size_t j = 0; j < re.size(); ++j) out[j] = point_value(form, re[j], im[j]);
}

ArgMax max_scalar(const QuadraticForm& form, std::span<const double> re, std::span<const double> im) {
  ArgMax best{-std::numeric_limits<double>::infinity(), ArgMax::npos};
  for (std::size_t j = 0; j < re.size(); ++j) {
    const double v = point_value(form, re[j], im[j]);
    if (v > best.value) best = {v, j};
  }
  return best;
}

}  // namespace qstar::kernels
