#pragma once

#include <optional>

#include "ckron/cmatrix.hpp"
#include "ckron/linalg.hpp"
#include "ckron/tolerances.hpp"

namespace ckron {

/// (lambda - i) / (lambda + i). Maps the real line onto the unit circle,
/// never reaching 1.
cdouble scalar_cayley(double lambda);

/// i (1 + u) / (1 - u) for unit-modulus u, returned as a real number.
/// Throws UnitEigenvalue when u is within tol.cluster of 1, NotUnitModulus
/// when |u| strays from 1 by more than tol.eq.
double scalar_inverse_cayley(cdouble u, const Tolerances& tol);

/// (A - iI)(A + iI)^{-1} for Hermitian A. The result is unitary and has no
/// eigenvalue 1. Throws NotHermitian.
CMatrix cayley(const CMatrix& a, const Tolerances& tol);

/// i (I + U)(I - U)^{-1}, the Hermitian preimage of a unitary U without
/// eigenvalue 1. Throws NotUnitary, UnitEigenvalue.
CMatrix inverse_cayley(const CMatrix& u, const Tolerances& tol);

/// A Hermitian matrix together with its transform.
struct CayleyPair {
  CMatrix hermitian;
  CMatrix unitary;
};

CayleyPair make_cayley_pair(const CMatrix& a, const Tolerances& tol);

/// For H = [[a+d, b-ic], [b+ic, a-d]], the phase phi with
/// cayley(H) = e^{i phi} H, if one exists.
///
/// A match exists exactly when both eigenvalues a +- sqrt(b^2+c^2+d^2) lie
/// in {-1, +1}, and the phase is then always -pi/2. The analytic candidate
/// is tried first; a 360-point phase grid guards it.
std::optional<double> phase_coincidence(double a, double b, double c, double d,
                                        const Tolerances& tol);

}  // namespace ckron
