#include <atomic>
#include <cstdlib>

#include "qstar/kernels.hpp"

namespace qstar::kernels {

namespace {

// -1: detect, otherwise a Backend value.
std::atomic<int> g_override{-1};

bool cpu_has_avx2() {
#if defined(QSTAR_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__)) && \
    (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend detect() {
  if (std::getenv("QSTAR_FORCE_SCALAR") != nullptr) return Backend::scalar;
  return avx2_available() ? Backend::avx2 : Backend::scalar;
}

}  // namespace

std::string_view to_string(Backend backend) {
  return backend == Backend::avx2 ? "avx2" : "scalar";
}

bool avx2_available() {
  static const bool available = cpu_has_avx2();
  return available;
}

#ifndef QSTAR_HAVE_AVX2
void evaluate_avx2(const QuadraticForm& form, std::span<const double> re,
                   std::span<const double> im, std::span<double> out) {
  evaluate_scalar(form, re, im, out);
}
ArgMax max_avx2(const QuadraticForm& form, std::span<const double> re, std::span<const double> im) {
  return max_scalar(form, re, im);
}
#endif

Backend active_backend() {
  const int forced = g_override.load(std::memory_order_relaxed);
  if (forced >= 0) {
    const auto b = static_cast<Backend>(forced);
    return (b == Backend::avx2 && !avx2_available()) ? Backend::scalar : b;
  }
  static const Backend detected = detect();
  return detected;
}

void set_backend_override(std::optional<Backend> backend) {
  g_override.store(backend ? static_cast<int>(*backend) : -1, std::memory_order_relaxed);
}

ArgMax max_quadratic_modulus(const QuadraticForm& form, std::span<const double> re,
                             std::span<const double> im) {
  return active_backend() == Backend::avx2 ? max_avx2(form, re, im) : max_scalar(form, re, im);
}

}  // namespace qstar::kernels
