#include "qstar/functionals.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qstar/error.hpp"

namespace qstar {

std::string_view to_string(FunctionalId id) {
  switch (id) {
    case FunctionalId::abs_a2: return "abs_a2";
    case FunctionalId::abs_a3: return "abs_a3";
    case FunctionalId::abs_a4: return "abs_a4";
    case FunctionalId::fekete_a2a3_a4: return "fekete_a2a3_a4";
    case FunctionalId::h1_2: return "h1_2";
    case FunctionalId::h2_2: return "h2_2";
    case FunctionalId::t1_2: return "t1_2";
    case FunctionalId::t2_2: return "t2_2";
    case FunctionalId::t3_2: return "t3_2";
    case FunctionalId::t1_3: return "t1_3";
    case FunctionalId::t2_3: return "t2_3";
  }
  return "unknown";
}

FunctionalId parse_functional(std::string_view name) {
  for (FunctionalId id : kAllFunctionals) {
    if (to_string(id) == name) return id;
  }
  throw Error(ErrorCode::UnknownId, "unknown functional '" + std::string(name) + "'");
}

cplx determinant(std::span<const cplx> m, int k) {
  if (k < 1 || m.size() != static_cast<std::size_t>(k) * static_cast<std::size_t>(k)) {
    throw Error(ErrorCode::IndexOutOfRange, "matrix storage does not match its dimension");
  }
  auto at = [&](int i, int j) { return m[static_cast<std::size_t>(i * k + j)]; };
  switch (k) {
    case 1: return at(0, 0);
    case 2: return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    case 3:
      return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
             at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
             at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    default: break;
  }
  std::vector<cplx> a(m.begin(), m.end());
  cplx det = 1.0;
  for (int col = 0; col < k; ++col) {
    int pivot = col;
    for (int r = col + 1; r < k; ++r) {
      if (std::abs(a[static_cast<std::size_t>(r * k + col)]) >
          std::abs(a[static_cast<std::size_t>(pivot * k + col)])) {
        pivot = r;
      }
    }
    if (a[static_cast<std::size_t>(pivot * k + col)] == cplx{}) return 0.0;
    if (pivot != col) {
      for (int j = 0; j < k; ++j) {
        std::swap(a[static_cast<std::size_t>(pivot * k + j)], a[static_cast<std::size_t>(col * k + j)]);
      }
      det = -det;
    }
    const cplx p = a[static_cast<std::size_t>(col * k + col)];
    det *= p;
    for (int r = col + 1; r < k; ++r) {
      const cplx factor = a[static_cast<std::size_t>(r * k + col)] / p;
      for (int j = col; j < k; ++j) {
        a[static_cast<std::size_t>(r * k + j)] -= factor * a[static_cast<std::size_t>(col * k + j)];
      }
    }
  }
  return det;
}

namespace {

void require_extent(std::span<const cplx> a, int n, int k, int highest) {
  if (n < 0 || k < 1) throw Error(ErrorCode::IndexOutOfRange, "need n >= 0 and k >= 1");
  if (highest >= static_cast<int>(a.size())) {
    throw Error(ErrorCode::IndexOutOfRange,
                "coefficient a_" + std::to_string(highest) + " is not available", highest);
  }
}

}  // namespace

std::vector<cplx> hankel_matrix(std::span<const cplx> a, int n, int k) {
  require_extent(a, n, k, n + 2 * k - 2);
  std::vector<cplx> m(static_cast<std::size_t>(k * k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) m[static_cast<std::size_t>(i * k + j)] = a[static_cast<std::size_t>(n + i + j)];
  }
  return m;
}

std::vector<cplx> toeplitz_matrix(std::span<const cplx> a, int n, int k) {
  require_extent(a, n, k, n + k - 1);
  std::vector<cplx> m(static_cast<std::size_t>(k * k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      m[static_cast<std::size_t>(i * k + j)] = a[static_cast<std::size_t>(n + std::abs(i - j))];
    }
  }
  return m;
}

cplx hankel_det(std::span<const cplx> a, int n, int k) { return determinant(hankel_matrix(a, n, k), k); }

cplx toeplitz_det(std::span<const cplx> a, int n, int k) {
  return determinant(toeplitz_matrix(a, n, k), k);
}

cplx functional_value(FunctionalId id, cplx a2, cplx a3, cplx a4) {
  switch (id) {
    case FunctionalId::abs_a2: return a2;
    case FunctionalId::abs_a3: return a3;
    case FunctionalId::abs_a4: return a4;
    case FunctionalId::fekete_a2a3_a4: return a2 * a3 - a4;
    case FunctionalId::h1_2: return a3 - a2 * a2;
    case FunctionalId::h2_2: return a2 * a4 - a3 * a3;
    case FunctionalId::t1_2: return 1.0 - a2 * a2;
    case FunctionalId::t2_2: return a2 * a2 - a3 * a3;
    case FunctionalId::t3_2: return a3 * a3 - a4 * a4;
    case FunctionalId::t1_3: return 1.0 - 2.0 * a2 * a2 + 2.0 * a2 * a2 * a3 - a3 * a3;
    case FunctionalId::t2_3: return (a2 - a4) * (a2 * a2 - 2.0 * a3 * a3 + a2 * a4);
  }
  throw Error(ErrorCode::UnknownId, "unknown functional");
}

double named_functional(FunctionalId id, cplx a2, cplx a3, cplx a4) {
  return std::abs(functional_value(id, a2, a3, a4));
}

std::optional<DeterminantForm> determinant_form(FunctionalId id) {
  using K = DeterminantKind;
  switch (id) {
    case FunctionalId::abs_a2: return DeterminantForm{K::hankel, 2, 1};
    case FunctionalId::abs_a3: return DeterminantForm{K::hankel, 3, 1};
    case FunctionalId::abs_a4: return DeterminantForm{K::hankel, 4, 1};
    case FunctionalId::fekete_a2a3_a4: return std::nullopt;
    case FunctionalId::h1_2: return DeterminantForm{K::hankel, 1, 2};
    case FunctionalId::h2_2: return DeterminantForm{K::hankel, 2, 2};
    case FunctionalId::t1_2: return DeterminantForm{K::toeplitz, 1, 2};
    case FunctionalId::t2_2: return DeterminantForm{K::toeplitz, 2, 2};
    case FunctionalId::t3_2: return DeterminantForm{K::toeplitz, 3, 2};
    case FunctionalId::t1_3: return DeterminantForm{K::toeplitz, 1, 3};
    case FunctionalId::t2_3: return DeterminantForm{K::toeplitz, 2, 3};
  }
  throw Error(ErrorCode::UnknownId, "unknown functional");
}

bool depends_on_a4(FunctionalId id) {
  switch (id) {
    case FunctionalId::abs_a4:
    case FunctionalId::fekete_a2a3_a4:
    case FunctionalId::h2_2:
    case FunctionalId::t3_2:
    case FunctionalId::t2_3:
      return true;
    default:
      return false;
  }
}

QuadraticInA4 functional_in_a4(FunctionalId id, cplx a2, cplx a3) {
  switch (id) {
    case FunctionalId::abs_a4: return {0.0, 1.0, 0.0};
    case FunctionalId::fekete_a2a3_a4: return {a2 * a3, -1.0, 0.0};
    case FunctionalId::h2_2: return {-a3 * a3, a2, 0.0};
    case FunctionalId::t3_2: return {a3 * a3, 0.0, -1.0};
    case FunctionalId::t2_3: {
      // (a2 - a4)(u + a2 a4) with u = a2^2 - 2 a3^2
      const cplx u = a2 * a2 - 2.0 * a3 * a3;
      return {a2 * u, a2 * a2 - u, -a2};
    }
    default:
      return {functional_value(id, a2, a3, 0.0), 0.0, 0.0};
  }
}

}  // namespace qstar
