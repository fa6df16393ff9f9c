#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qstar/series.hpp"

namespace testing {

using qstar::cplx;

inline bool close(cplx a, cplx b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

inline bool close_abs(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }

inline cplx random_disk(std::mt19937_64& rng, double radius = 1.0) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    const double x = u(rng);
    const double y = u(rng);
    if (x * x + y * y <= 1.0) return {radius * x, radius * y};
  }
}

inline std::vector<cplx> random_coeffs(std::mt19937_64& rng, int count) {
  std::normal_distribution<double> g;
  std::vector<cplx> c(static_cast<std::size_t>(count));
  for (auto& v : c) v = {g(rng), g(rng)};
  return c;
}

}  // namespace testing
