#pragma once

#include <optional>
#include <utility>

#include "ckron/cmatrix.hpp"
#include "ckron/tolerances.hpp"

namespace ckron {

/// A kron I_n + I_m kron B. Satisfies e^{kron_sum(A,B)} = e^A kron e^B.
CMatrix kron_sum(const CMatrix& a, const CMatrix& b);

/// Domain test for the preimage map: the pair (A, B) is admissible iff no
/// product of unit-circle eigenvalues scalar_cayley(a_j) * scalar_cayley(b_k)
/// lands within tol.cluster of 1.
struct DomainVerdict {
  bool in_domain = false;
  /// The violating eigenvalue pair (x of U_A, y of U_B), present only when
  /// the pair lies outside the domain; |x*y - 1| is minimal over all pairs.
  std::optional<std::pair<cdouble, cdouble>> offending_pair;
  /// min |x*y - 1| over all eigenvalue pairs.
  double min_distance = 0.0;
};

/// Throws NotHermitian.
DomainVerdict in_domain(const CMatrix& a, const CMatrix& b, const Tolerances& tol);

/// Two algebraically equivalent formulas for g_map; both are computed from
/// the Cayley transforms of the arguments and must agree.
enum class GVariant { primary, alternate };

/// The unique Hermitian G with cayley(G) = kron(cayley(A), cayley(B)),
/// defined on in-domain pairs:
///
///   primary   G = i (U_A* kron I - I kron U_B)^{-1} (U_A* kron I + I kron U_B)
///   alternate G = i (-U_A kron I + I kron U_B*)^{-1} (U_A kron I + I kron U_B*)
///
/// Throws OutsideDomain (with the offending eigenvalue pair), NotHermitian.
CMatrix g_map(const CMatrix& a, const CMatrix& b, const Tolerances& tol,
              GVariant variant = GVariant::primary);

}  // namespace ckron
