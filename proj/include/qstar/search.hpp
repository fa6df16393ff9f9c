#pragma once

// Brute-force maximization of the coefficient functionals over the Schwarz
// family parameterized by (b1, x, y), and the verification reports built on
// top of it.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qstar/bounds.hpp"
#include "qstar/functionals.hpp"
#include "qstar/series.hpp"

namespace qstar {

inline constexpr std::string_view kToolVersion = "qstar 0.1.0";
inline constexpr double kAttainTolerance = 1e-2;
inline constexpr double kViolationTolerance = 1e-9;

/// Point counts per coordinate. Radii and b1 run over [0, 1] with both
/// endpoints; angles over [0, 2 pi) without the duplicate endpoint.
struct GridSpec {
  int b1_points = 51;
  int x_radii = 21;
  int x_angles = 36;
  int y_radii = 21;
  int y_angles = 36;
  int refinement_levels = 3;

  static GridSpec coarse() { return {11, 6, 12, 6, 12, 2}; }
  static GridSpec standard() { return {}; }
  static GridSpec fine() { return {81, 31, 48, 31, 48, 4}; }

  /// Throws InvalidParams unless every count is usable.
  void validate() const;
};

/// "coarse", "default" or "fine"; throws UnknownId otherwise.
GridSpec parse_grid(std::string_view name);

enum class B1Slice {
  full,       // b1 in [0, 1]
  zero_only,  // b1 = 0, i.e. a2 = 0
};

struct SearchSpec {
  FunctionalId functional = FunctionalId::abs_a2;
  double q = 0.5;
  GridSpec grid;
  /// Applied as a_n -> a_n e^{i (n-1) theta} before evaluating.
  double rotation_theta = 0.0;
  B1Slice slice = B1Slice::full;
};

struct SearchPoint {
  double b1 = 0.0;
  cplx x;
  cplx y;
};

struct SearchResult {
  double max_value = 0.0;
  SearchPoint argmax;
  double bound = 0.0;
  /// bound - max_value
  double gap = 0.0;
  std::int64_t evaluations = 0;
};

/// The case of a two-case bound that a slice is compared against.
CaseFlag slice_case(B1Slice slice);

/// Grid search plus refinement_levels rounds of x5 zoom around the incumbent.
/// Ties keep the lexicographically smallest (b1, |x|, arg x, |y|, arg y)
/// within a level. The reported maximum is recomputed through
/// parametric_b2_b3 and initial_coeffs_closed at the argmax.
SearchResult maximize_functional(const SearchSpec& spec);

/// Functional value of the omega(z) = z function at real q rotated by theta.
double rotated_extremal_value(FunctionalId id, double q, double theta);

enum class Verdict { attained, consistent, violation, skipped };
std::string_view to_string(Verdict verdict);

struct ReportItem {
  std::string name;
  cplx zeta;
  double alpha = 0.0;
  /// "a2_zero", "a2_nonzero" or empty.
  std::string case_label;
  /// How `achieved` was produced: grid, grid_b1_zero, rotated_extremal, random.
  std::string method;
  double bound = 0.0;
  double achieved = 0.0;
  double gap = 0.0;
  Verdict verdict = Verdict::consistent;
  std::int64_t samples = 0;
  std::int64_t violations = 0;
  std::int64_t skipped = 0;
  /// Sample indices that violated the inequality, ascending.
  std::vector<std::int64_t> violating_samples;
};

struct VerificationReport {
  std::vector<ReportItem> items;
  std::uint64_t seed = 0;
  std::string tool_version{kToolVersion};

  bool has_violation() const;
};

/// Random Schwarz functions from seeded Schur parameters, checked against the
/// chain inequality, parseval_rhs and (when hypothesis_check holds) the
/// an_product bound, for every n <= order. Sample 0 is omega = 0, sample 1 is
/// omega = z, samples 2 .. count+1 are random tuples of length depth.
VerificationReport random_schwarz_suite(const ClassParams& params, std::uint64_t seed, int count,
                                        int depth, int order);

/// One item per (q, functional): grid search for the coefficient and Hankel
/// family, the pi/2-rotated extremal for the Toeplitz family. Two-case
/// functionals get one item per case.
VerificationReport sharpness_report(std::span<const double> q_list,
                                    std::span<const FunctionalId> functionals,
                                    const GridSpec& grid = GridSpec::standard(),
                                    double attain_tol = kAttainTolerance);

}  // namespace qstar
