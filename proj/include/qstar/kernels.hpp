#pragma once

// Batched evaluation of v(z) = |c0 + c1 z + c2 z^2| + w (1 - |z|^2) over
// points stored as separate real/imaginary arrays, reduced to the maximum.
//
// This is the inner loop of both the sharpness grid search (every functional
// is a quadratic in the Schwarz parameter y once b1 and x are fixed, w = 0)
// and the Y-functional grid oracle (w = 1).
//
// The scalar routine is the reference. SIMD variants use the same operation
// order without fused multiply-add, so their results are bit-identical and
// the argmax is the same index.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

namespace qstar::kernels {

struct QuadraticForm {
  double c0_re = 0.0, c0_im = 0.0;
  double c1_re = 0.0, c1_im = 0.0;
  double c2_re = 0.0, c2_im = 0.0;
  double disk_weight = 0.0;
};

/// Maximum value and the smallest index attaining it. index == npos and
/// value == -inf for an empty batch.
struct ArgMax {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  double value;
  std::size_t index;
};

enum class Backend { scalar, avx2 };
std::string_view to_string(Backend backend);

void evaluate_scalar(const QuadraticForm& form, std::span<const double> re,
                     std::span<const double> im, std::span<double> out);
ArgMax max_scalar(const QuadraticForm& form, std::span<const double> re, std::span<const double> im);

/// True when the AVX2 variant was compiled in and the CPU supports it.
bool avx2_available();

// Only callable when avx2_available().
void evaluate_avx2(const QuadraticForm& form, std::span<const double> re,
                   std::span<const double> im, std::span<double> out);
ArgMax max_avx2(const QuadraticForm& form, std::span<const double> re, std::span<const double> im);

/// Backend chosen at first use: AVX2 when available unless the environment
/// variable QSTAR_FORCE_SCALAR is set.
Backend active_backend();
/// Overrides the runtime choice (tests); std::nullopt restores detection.
/// Requesting avx2 on a machine without it falls back to scalar.
void set_backend_override(std::optional<Backend> backend);

ArgMax max_quadratic_modulus(const QuadraticForm& form, std::span<const double> re,
                             std::span<const double> im);

}  // namespace qstar::kernels
