#include "qstar/bounds.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qstar/error.hpp"
#include "qstar/kernels.hpp"

namespace qstar {

std::string_view to_string(CaseFlag flag) {
  return flag == CaseFlag::a2_zero ? "a2_zero" : "a2_nonzero";
}

namespace {

bool needs_case_flag(FunctionalId id) { return id == FunctionalId::h2_2 || id == FunctionalId::t2_3; }

double closed_form(FunctionalId id, double q, std::optional<CaseFlag> flag) {
  const double q2 = q * q;
  const double q3 = q2 * q;
  const double q4 = q2 * q2;
  const double s1 = 1.0 + q;            // [2]_q
  const double s2 = 1.0 + q + q2;       // [3]_q
  const double a4_poly = 4.0 + 4.0 * q + 3.0 * q2 + q3;
  switch (id) {
    case FunctionalId::abs_a2: return 2.0 / q;
    case FunctionalId::abs_a3: return (4.0 + 2.0 * q) / (q2 * s1);
    case FunctionalId::abs_a4: return 2.0 * a4_poly / (q3 * s2 * s1);
    case FunctionalId::fekete_a2a3_a4: return 2.0 * (q + 2.0) / (q2 * s2);
    case FunctionalId::h1_2: return 2.0 / (q * s1);
    case FunctionalId::h2_2:
      if (*flag == CaseFlag::a2_zero) return 4.0 / (q2 * s1 * s1);
      return 4.0 * (2.0 + q) / (q2 * s1 * s1 * s2);
    case FunctionalId::t1_2: return 1.0 + 4.0 / q2;
    case FunctionalId::t2_2:
      // |a2|^2 + |a3|^2 at the extremal coefficients; the first term is 4/q^2.
      return 4.0 / q2 + 4.0 * (2.0 + q) * (2.0 + q) / (q4 * s1 * s1);
    case FunctionalId::t3_2:
      return 4.0 * (2.0 + q) * (2.0 + q) / (q4 * s1 * s1) +
             4.0 * a4_poly * a4_poly / (q4 * q2 * s2 * s2 * s1 * s1);
    case FunctionalId::t1_3:
      return 1.0 + 8.0 / q2 + 4.0 * (3.0 * q2 + 8.0 * q + 4.0) / (q4 * s1 * s1);
    case FunctionalId::t2_3: {
      const double q5 = q4 * q;
      const double q6 = q3 * q3;
      const double q7 = q6 * q;
      const double shared = 4.0 + 4.0 * q + 4.0 * q2 + 3.0 * q3 + 2.0 * q4 + q5;
      if (*flag == CaseFlag::a2_zero) {
        return 8.0 * (4.0 + 4.0 * q + 3.0 * q2 + 2.0 * q3 + q4) * shared / (q7 * s1 * s1 * s1 * s2);
      }
      return 8.0 * shared * (4.0 + 8.0 * q + 12.0 * q2 + 9.0 * q3 + 5.0 * q4 + 3.0 * q5 + q6) /
             (q7 * s1 * s1 * s1 * s2 * s2);
    }
  }
  throw Error(ErrorCode::UnknownId, "unknown functional");
}

double an_product(const ClassParams& params, int n) {
  if (n < 1) throw Error(ErrorCode::OutOfRange, "an_product needs n >= 1");
  const double shift = 1.0 - 2.0 * params.alpha();
  double product = 1.0;
  for (int k = 2; k <= n; ++k) {
    const cplx den = q_number(k, params.zeta()) - 1.0;
    if (std::abs(den) <= 1e-12) {
      throw Error(ErrorCode::DegenerateDivisor, "[" + std::to_string(k) + "]_zeta equals 1", k);
    }
    product *= std::abs((shift + q_number(k - 1, params.zeta())) / den);
  }
  return product;
}

}  // namespace

double bound_value(const BoundQuery& query) {
  if (const auto* aux = std::get_if<AuxBound>(&query.id)) {
    if (query.case_flag) throw Error(ErrorCode::PreconditionViolated, "case flag only applies to h2_2 and t2_3");
    if (!query.n) throw Error(ErrorCode::PreconditionViolated, "coefficient index n is required");
    if (*aux == AuxBound::an_product) return an_product(query.params, *query.n);
    return parseval_rhs(query.params, query.abs_a, *query.n);
  }
  const FunctionalId id = std::get<FunctionalId>(query.id);
  if (!query.params.is_real_q()) {
    throw Error(ErrorCode::OutOfRange, "functional bounds need real zeta = q in (0, 1) and alpha = 0");
  }
  if (needs_case_flag(id) && !query.case_flag) {
    throw Error(ErrorCode::MissingCaseFlag, std::string(to_string(id)) + " needs a case flag");
  }
  if (!needs_case_flag(id) && query.case_flag) {
    throw Error(ErrorCode::PreconditionViolated, "case flag only applies to h2_2 and t2_3");
  }
  return closed_form(id, query.params.zeta().real(), query.case_flag);
}

double functional_bound(FunctionalId id, double q, std::optional<CaseFlag> flag) {
  BoundQuery query{id, ClassParams::real(q), std::nullopt, flag, {}};
  return bound_value(query);
}

double parseval_rhs(const ClassParams& params, std::span<const double> abs_a, int n) {
  if (n < 2) throw Error(ErrorCode::OutOfRange, "parseval_rhs needs n >= 2");
  if (abs_a.size() != static_cast<std::size_t>(n - 1)) {
    throw Error(ErrorCode::PreconditionViolated, "abs_a must hold |a_1| .. |a_{n-1}|");
  }
  if (std::abs(abs_a[0] - 1.0) > 1e-12) {
    throw Error(ErrorCode::PreconditionViolated, "|a_1| must equal 1");
  }
  const cplx zeta = params.zeta();
  const double shift = 1.0 - 2.0 * params.alpha();
  const double den = std::norm(q_number(n, zeta) - 1.0);
  if (std::sqrt(den) <= 1e-12) {
    throw Error(ErrorCode::DegenerateDivisor, "[" + std::to_string(n) + "]_zeta equals 1", n);
  }
  double sum = 0.0;
  for (int k = 1; k < n; ++k) {
    const cplx bracket = q_number(k, zeta);
    const double weight = std::norm(shift + bracket) - std::norm(bracket - 1.0);
    const double ak = abs_a[static_cast<std::size_t>(k - 1)];
    sum += weight * ak * ak;
  }
  // Rounding can leave a tiny negative total when the true value is 0.
  return std::sqrt(std::max(0.0, sum / den));
}

bool d1_region(double mu, double nu) {
  const double m = std::abs(mu);
  const bool lower = m >= 0.5 && nu <= -(2.0 / 3.0) * (m + 1.0);
  const bool upper = m >= 4.0 && nu >= (2.0 / 3.0) * (m - 1.0);
  return lower || upper;
}

double prokhorov_functional(cplx b1, cplx b2, cplx b3, double mu, double nu) {
  return std::abs(b3 + mu * b1 * b2 + nu * b1 * b1 * b1);
}

ProkhorovPair a4_prokhorov_pair(double q) {
  return {(4.0 + 4.0 * q + 2.0 * q * q) / (q * (1.0 + q)),
          (4.0 + 4.0 * q + 3.0 * q * q + q * q * q) / (q * q * (1.0 + q))};
}

ProkhorovPair fekete_prokhorov_pair(double q) { return {2.0 / q, -(q + 2.0) / q}; }

double y_closed(double a, double b, double c) {
  if (a * c < 0.0) throw Error(ErrorCode::PreconditionViolated, "closed form of Y needs ac >= 0");
  const double slack = 1.0 - std::abs(c);
  if (std::abs(b) >= 2.0 * slack) return std::abs(a) + std::abs(b) + std::abs(c);
  return 1.0 + std::abs(a) + b * b / (4.0 * slack);
}

namespace {

struct PolarMesh {
  int radial = -1;
  int angular = -1;
  std::vector<double> re;
  std::vector<double> im;
};

const PolarMesh& polar_mesh(int radial, int angular) {
  thread_local PolarMesh mesh;
  if (mesh.radial == radial && mesh.angular == angular) return mesh;
  mesh.radial = radial;
  mesh.angular = angular;
  mesh.re.assign(1, 0.0);
  mesh.im.assign(1, 0.0);
  for (int j = 1; j <= radial; ++j) {
    const double r = static_cast<double>(j) / radial;
    for (int k = 0; k < angular; ++k) {
      const double t = 2.0 * std::numbers::pi * k / angular;
      mesh.re.push_back(r * std::cos(t));
      mesh.im.push_back(r * std::sin(t));
    }
  }
  return mesh;
}

}  // namespace

double y_oracle(cplx a, cplx b, cplx c, int radial, int angular) {
  if (radial < 1 || angular < 1) throw Error(ErrorCode::OutOfRange, "mesh resolution must be positive");
  const PolarMesh& mesh = polar_mesh(radial, angular);
  const kernels::QuadraticForm form{a.real(), a.imag(), b.real(), b.imag(), c.real(), c.imag(), 1.0};
  return kernels::max_quadratic_modulus(form, mesh.re, mesh.im).value;
}

double hankel_y_c(double q, double b1) {
  const double s1 = 1.0 + q;
  return -b1 - (1.0 + q + q * q) * (1.0 - b1 * b1) / (s1 * s1 * b1);
}

HankelYTriple hankel_y_triple(double q, double b1) {
  if (!(q > 0.0 && q < 1.0)) throw Error(ErrorCode::OutOfRange, "q must lie in (0, 1)");
  if (!(b1 > 0.0 && b1 < 1.0)) throw Error(ErrorCode::OutOfRange, "b1 must lie in (0, 1)");
  const double s1 = 1.0 + q;
  const double r = 1.0 - b1 * b1;
  HankelYTriple t{};
  t.a = -(2.0 + q) * b1 * b1 * b1 / (r * s1 * s1);
  t.b = 2.0 * b1 / (s1 * s1);
  t.c = hankel_y_c(q, b1);
  t.y = (1.0 - q) * b1 / (s1 * r) + (1.0 + q + q * q) / (b1 * r * s1 * s1);
  return t;
}

bool hypothesis_check(const ClassParams& params, int n_max) {
  if (n_max < 2) throw Error(ErrorCode::PreconditionViolated, "n_max must be at least 2");
  for (int k = 1; k <= n_max; ++k) {
    if (!(q_number(k, params.zeta()).real() > params.alpha())) return false;
  }
  return true;
}

}  // namespace qstar
