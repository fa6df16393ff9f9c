#pragma once

// Closed-form coefficient and determinant bounds, plus the auxiliary
// quantities their proofs rest on (Prokhorov-Szynal region, the Y functional,
// the product bound for complex zeta).

#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "qstar/functionals.hpp"
#include "qstar/series.hpp"

namespace qstar {

enum class CaseFlag { a2_zero, a2_nonzero };
std::string_view to_string(CaseFlag flag);

enum class AuxBound { an_product, parseval_rhs };

struct BoundQuery {
  std::variant<FunctionalId, AuxBound> id;
  ClassParams params = ClassParams::real(0.5);
  std::optional<int> n;
  /// Required for h2_2 and t2_3, rejected for everything else.
  std::optional<CaseFlag> case_flag;
  /// |a_1|, ..., |a_{n-1}| for parseval_rhs.
  std::vector<double> abs_a;
};

/// Evaluates the closed-form bound. Functional bounds require real
/// zeta = q in (0,1) and alpha = 0. an_product needs `n` and is the modulus
/// product prod_{k=2}^n |((1-2 alpha) + [k-1]) / ([k] - 1)|.
double bound_value(const BoundQuery& query);

/// Shorthand for a functional bound at real q.
double functional_bound(FunctionalId id, double q, std::optional<CaseFlag> flag = std::nullopt);

/// Square root of
///   sum_{k=1}^{n-1} (|(1-2a) + [k]|^2 - |[k] - 1|^2) |a_k|^2 / |[n] - 1|^2,
/// a bound on |a_n|. `abs_a` holds |a_1|..|a_{n-1}|.
double parseval_rhs(const ClassParams& params, std::span<const double> abs_a, int n);

/// Membership in the Prokhorov-Szynal region D1.
bool d1_region(double mu, double nu);

/// |b3 + mu b1 b2 + nu b1^3|
double prokhorov_functional(cplx b1, cplx b2, cplx b3, double mu, double nu);

struct ProkhorovPair {
  double mu;
  double nu;
};
/// (mu, nu) for the |a4| estimate.
ProkhorovPair a4_prokhorov_pair(double q);
/// (mu, nu) for the |a2 a3 - a4| estimate.
ProkhorovPair fekete_prokhorov_pair(double q);

/// Y(a, b, c) = max over the closed disk of |a + bz + cz^2| + 1 - |z|^2 for
/// real a, b, c with ac >= 0 (PreconditionViolated otherwise).
double y_closed(double a, double b, double c);

/// Grid maximum of the same expression over a polar mesh with radii
/// j/radial (j = 0..radial) and angles 2 pi k/angular; a lower bound on Y.
double y_oracle(cplx a, cplx b, cplx c, int radial = 256, int angular = 720);

struct HankelYTriple {
  double a;
  double b;
  double c;
  double y;
};

/// The (a, b, c) triple arising in the H_2^(2) estimate, with c corrected to
///   c = -b1 - (1+q+q^2)(1-b1^2) / ((1+q)^2 b1),
/// and y the simplified value of Y(a, b, c). Needs q, b1 in (0, 1).
HankelYTriple hankel_y_triple(double q, double b1);

/// c as it must read for the H_2^(2) factorization to hold; see hankel_y_triple.
double hankel_y_c(double q, double b1);

/// Re([k]_zeta) > alpha for every 1 <= k <= n_max.
bool hypothesis_check(const ClassParams& params, int n_max);

}  // namespace qstar
