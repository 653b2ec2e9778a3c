#pragma once

#include <functional>
#include <vector>

#include "ckron/cmatrix.hpp"
#include "ckron/tolerances.hpp"

namespace ckron {

/// Eigendecomposition of a Hermitian matrix: real eigenvalues sorted
/// ascending, the j-th column of `eigenvectors` paired with the j-th value.
struct Spectrum {
  std::vector<double> eigenvalues;
  CMatrix eigenvectors;
};

/// Kronecker product: block (j,k) of the result is a_{jk} * B.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Block-diagonal stacking diag(A, B); rectangular blocks allowed.
CMatrix direct_sum(const CMatrix& a, const CMatrix& b);

/// Corner embedding of a 2x2 matrix around a central square block:
///
///   | a11  0   a12 |
///   |  0   B    0  |
///   | a21  0   a22 |
///
/// Permutation-equivalent to direct_sum(A, B).
CMatrix star_product(const CMatrix& a, const CMatrix& b);

/// The mn x mn permutation P with P (A kron B) P^t = B kron A
/// for all A in M_m, B in M_n.
CMatrix commutation_matrix(std::size_t m, std::size_t n);

/// Cyclic complex Jacobi rotations until the largest off-diagonal magnitude
/// drops to tol.conv * ||A||_F. Sweep cap 30.
///
/// Throws NotHermitian, NoConvergence.
Spectrum hermitian_eig(const CMatrix& a, const Tolerances& tol);

/// Partial-pivot Gauss-Jordan elimination over complex scalars.
/// Throws Singular when a pivot magnitude falls to tol.eq * ||A||_max.
CMatrix inverse(const CMatrix& a, const Tolerances& tol);

/// V diag(fn(lambda_j)) V* over the Hermitian eigendecomposition of A.
CMatrix spectral_fn(const CMatrix& a, const std::function<cdouble(double)>& fn,
                    const Tolerances& tol);

/// ||U*U - I||_max <= tol.eq
bool is_unitary(const CMatrix& u, const Tolerances& tol);

/// True iff U has an eigenvalue within tol.cluster of 1.
///
/// Decided by a determinant gate on U - I followed by inverse-iteration
/// refinement of the eigenvalue nearest 1; no general complex eigensolver.
bool has_unit_eigenvalue(const CMatrix& u, const Tolerances& tol);

/// Eigenvalues of a unitary matrix, via simultaneous diagonalization of its
/// commuting Hermitian and anti-Hermitian parts. Order unspecified.
/// Throws NotUnitary.
std::vector<cdouble> unitary_eigenvalues(const CMatrix& u, const Tolerances& tol);

/// Merges sorted eigenvalues into clusters of width tol.cluster_width(rho)
/// and returns one representative (the mean) per cluster, ascending.
std::vector<double> distinct_eigenvalues(const std::vector<double>& sorted_values,
                                         const Tolerances& tol);

/// max |lambda| over a real spectrum; 0 for an empty one.
double spectral_radius(const std::vector<double>& values);

}  // namespace ckron
