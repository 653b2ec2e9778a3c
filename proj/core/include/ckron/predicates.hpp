#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ckron/cmatrix.hpp"
#include "ckron/tolerances.hpp"

namespace ckron {

/// a*b*(1 - a - b) - 1: zero exactly when the scalar transforms satisfy
/// scalar_cayley(a) * scalar_cayley(b) = scalar_cayley(a*b).
double pair_identity_residual(double a, double b);

/// The real roots of a*b^2 - a(1-a)*b + 1 = 0: the only eigenvalues the
/// second factor may carry when the first has the single eigenvalue a.
/// One root when the discriminant a^2(1-a)^2 - 4a is within tol.cluster of
/// zero, two when positive. Sorted ascending.
/// Throws ZeroEigenvalue, NoRealCompanion.
std::vector<double> companion_eigenvalues(double a, const Tolerances& tol);

enum class IdentityCase { SingleA, SingleB };

/// Outcome of the equality test cayley(kron(A,B)) == kron(cayley(A), cayley(B)).
struct KronIdentityVerdict {
  bool holds = false;
  std::optional<IdentityCase> matched_case;
  /// max |a*b*(1-a-b) - 1| over distinct eigenvalue pairs.
  double residual = 0.0;
  /// ||cayley(kron(A,B)) - kron(cayley(A), cayley(B))||_max
  double direct_residual = 0.0;
};

/// Runs both the spectral criterion (one side single nonzero eigenvalue, the
/// other's spectrum contained in its companion roots) and the direct matrix
/// comparison. The two must agree; disagreement throws CrossCheckFailure.
/// Throws NotHermitian.
KronIdentityVerdict check_kron_identity(const CMatrix& a, const CMatrix& b,
                                        const Tolerances& tol);

const char* to_string(IdentityCase c);

struct MultipartiteResult {
  bool holds = false;
  /// ||cayley(kron of all) - kron of each cayley||_max
  double residual = 0.0;
};

inline constexpr std::size_t kDefaultDimensionCap = 4096;

/// Direct comparison of cayley(A_1 kron ... kron A_r) against
/// cayley(A_1) kron ... kron cayley(A_r).
/// Throws NotHermitian, DimensionCap.
MultipartiteResult multipartite_direct(const std::vector<CMatrix>& matrices,
                                       const Tolerances& tol,
                                       std::size_t dimension_cap = kDefaultDimensionCap);

/// Sufficient condition via nested bipartite chains: every link
/// (head, kron of tail) of the left-nested chain, or every link
/// (head prefix, growing tail) of the right-nested chain, must satisfy the
/// spectral criterion of check_kron_identity. True if either chain closes.
/// Throws NotHermitian, DimensionCap.
bool multipartite_sufficient(const std::vector<CMatrix>& matrices, const Tolerances& tol,
                             std::size_t dimension_cap = kDefaultDimensionCap);

/// True iff cayley of the k-fold Kronecker power of I_m equals the k-fold
/// Kronecker power of cayley(I_m); analytically this is k = 1 (mod 4).
/// Computed directly for products up to 1024 rows and by the scalar
/// criterion above that; where both run they are cross-checked.
bool identity_power_equal(std::size_t m, std::size_t k);

}  // namespace ckron
