#pragma once

#include <cstddef>
#include <vector>

#include "ckron/cmatrix.hpp"
#include "ckron/tolerances.hpp"

namespace ckron {

/// Complex coefficients a_{jk} of an expansion over a product basis,
/// indexed j < m, k < n.
struct CoefficientGrid {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<cdouble> values;  // row-major, m*n entries

  CoefficientGrid(std::size_t m_, std::size_t n_, std::vector<cdouble> values_);

  cdouble operator()(std::size_t j, std::size_t k) const { return values[j * n + k]; }
};

/// True iff a_{pq} a_{rs} = a_{ps} a_{rq} for all index pairs, i.e. the grid
/// has rank at most one as an m x n matrix. Tolerance scales with the
/// largest coefficient magnitude squared.
bool grid_rank1_check(const CoefficientGrid& grid, const Tolerances& tol);

/// Reshapes an mn x mn matrix into an m^2 x n^2 matrix under which Kronecker
/// products become rank-one outer products:
///
///   R[j*m + j', k*n + k'] = M[j*n + k, j'*n + k']
///
/// Linear and invertible. Throws DimensionMismatch.
CMatrix kron_rearrange(const CMatrix& m_mat, std::size_t m, std::size_t n);

/// Inverse reshaping; kron_unrearrange(kron_rearrange(M)) == M exactly.
CMatrix kron_unrearrange(const CMatrix& r_mat, std::size_t m, std::size_t n);

/// A Kronecker factorization M = kron(left, right).
struct KronFactors {
  CMatrix left;
  CMatrix right;
};

/// Rank-one extraction from the rearrangement, pivoting on its
/// largest-magnitude entry. The left factor is normalized to Frobenius norm
/// sqrt(m) and the joint phase is fixed so its largest entry is real
/// positive. Throws NotRankOne (with the pivot-prediction residual) when a
/// second independent direction exceeds tol.eq * ||M||_F.
KronFactors kron_factorize(const CMatrix& m_mat, std::size_t m, std::size_t n,
                           const Tolerances& tol);

/// Which spectral condition makes cayley(kron(A,B)) Kronecker-factorable.
enum class FactorVerdict {
  SingleSpectrumA,      // A has one distinct eigenvalue
  SingleSpectrumB,      // B has one distinct eigenvalue
  TwoByTwoUnitProduct,  // two distinct on each side with a1*a2*b1*b2 = 1
  NotFactorable,
};

struct FactorClassification {
  FactorVerdict verdict = FactorVerdict::NotFactorable;
  std::vector<double> distinct_eigenvalues_a;
  std::vector<double> distinct_eigenvalues_b;
  /// max |(a_p - a_r)(b_q - b_s)(a_p a_r b_q b_s - 1)| over distinct
  /// eigenvalue quadruples.
  double residual = 0.0;
};

/// Spectral classification of factorability for a Hermitian pair.
/// Throws NotHermitian.
FactorClassification classify_factorability(const CMatrix& a, const CMatrix& b,
                                            const Tolerances& tol);

const char* to_string(FactorVerdict verdict);

/// Hermitian matrices (C, D) with
/// kron(cayley(C), cayley(D)) = cayley(kron(A, B)).
///
/// Factors cayley(kron(A,B)) into unitaries, then shifts their joint phase
/// to the midpoint of the largest angular gap left free by both factor
/// spectra, so that neither factor has eigenvalue 1 and the inverse
/// transform applies. Throws NotFactorable, NoSafePhase.
KronFactors hermitian_refactor(const CMatrix& a, const CMatrix& b, const Tolerances& tol);

}  // namespace ckron
