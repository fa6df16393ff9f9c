#pragma once

// Hankel and Toeplitz determinants of Taylor coefficients and the named
// coefficient functionals bounded for the q-starlike class.

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qstar/series.hpp"

namespace qstar {

enum class FunctionalId {
  abs_a2,
  abs_a3,
  abs_a4,
  fekete_a2a3_a4,
  h1_2,
  h2_2,
  t1_2,
  t2_2,
  t3_2,
  t1_3,
  t2_3,
};

inline constexpr std::array<FunctionalId, 11> kAllFunctionals = {
    FunctionalId::abs_a2, FunctionalId::abs_a3, FunctionalId::abs_a4,
    FunctionalId::fekete_a2a3_a4, FunctionalId::h1_2, FunctionalId::h2_2,
    FunctionalId::t1_2, FunctionalId::t2_2, FunctionalId::t3_2,
    FunctionalId::t1_3, FunctionalId::t2_3,
};

std::string_view to_string(FunctionalId id);
/// Throws UnknownId for unrecognized names.
FunctionalId parse_functional(std::string_view name);

/// Determinant of a k x k row-major complex matrix. Cofactor expansion for
/// k <= 3, Gaussian elimination with partial pivoting otherwise.
cplx determinant(std::span<const cplx> matrix, int k);

/// `a[j]` is the coefficient a_j (a[0] = a_0 = 0, a[1] = a_1 = 1).
/// Entry (i, j) of H_n^(k) is a_{n+i+j}, zero-based i, j.
cplx hankel_det(std::span<const cplx> a, int n, int k);
/// Symmetric Toeplitz matrix, entry (i, j) = a_{n+|i-j|}; no conjugation.
cplx toeplitz_det(std::span<const cplx> a, int n, int k);

std::vector<cplx> hankel_matrix(std::span<const cplx> a, int n, int k);
std::vector<cplx> toeplitz_matrix(std::span<const cplx> a, int n, int k);

/// Signed (complex) value of the functional's closed form.
cplx functional_value(FunctionalId id, cplx a2, cplx a3, cplx a4);

/// |functional_value|.
double named_functional(FunctionalId id, cplx a2, cplx a3, cplx a4);

enum class DeterminantKind { hankel, toeplitz };
struct DeterminantForm {
  DeterminantKind kind;
  int n;
  int k;
};

/// The determinant a functional is the modulus of; empty for the Fekete-type
/// combination, which is not a determinant.
std::optional<DeterminantForm> determinant_form(FunctionalId id);

/// The functional as a polynomial c0 + c1 a4 + c2 a4^2 with a2, a3 fixed.
struct QuadraticInA4 {
  cplx c0;
  cplx c1;
  cplx c2;
};
QuadraticInA4 functional_in_a4(FunctionalId id, cplx a2, cplx a3);

bool depends_on_a4(FunctionalId id);

}  // namespace qstar
