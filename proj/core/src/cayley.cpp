#include "ckron/cayley.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <string>

#include "ckron/errors.hpp"

namespace ckron {

namespace {

const cdouble kImag{0.0, 1.0};

CMatrix shift_diagonal(const CMatrix& a, cdouble shift) {
  CMatrix out = a;
  for (std::size_t i = 0; i < out.rows(); ++i) out(i, i) += shift;
  return out;
}

}  // namespace

cdouble scalar_cayley(double lambda) { return (lambda - kImag) / (lambda + kImag); }

double scalar_inverse_cayley(cdouble u, const Tolerances& tol) {
  if (std::abs(std::abs(u) - 1.0) > tol.eq) {
    throw NotUnitModulus("scalar_inverse_cayley: |u| = " + std::to_string(std::abs(u)));
  }
  if (std::abs(u - 1.0) <= tol.cluster) {
    throw UnitEigenvalue("scalar_inverse_cayley: u lies at the excluded point 1");
  }
  const cdouble lambda = kImag * (1.0 + u) / (1.0 - u);
  return lambda.real();
}

CMatrix cayley(const CMatrix& a, const Tolerances& tol) {
  if (!is_hermitian(a, tol.eq)) {
    throw NotHermitian("cayley: input is not Hermitian within tolerance");
  }
  const CMatrix numerator = shift_diagonal(a, -kImag);
  const CMatrix denominator_inv = inverse(shift_diagonal(a, kImag), tol);
#ifndef NDEBUG
  // The resolvent factors commute for Hermitian input; both orders give U_A.
  assert(max_abs_diff(numerator * denominator_inv, denominator_inv * numerator) <=
         1e2 * tol.eq * std::max(1.0, a.norm_max()));
#endif
  return numerator * denominator_inv;
}

CMatrix inverse_cayley(const CMatrix& u, const Tolerances& tol) {
  if (!is_unitary(u, tol)) {
    throw NotUnitary("inverse_cayley: input is not unitary within tolerance");
  }
  if (has_unit_eigenvalue(u, tol)) {
    throw UnitEigenvalue("inverse_cayley: 1 is in the spectrum, preimage undefined");
  }
  const CMatrix identity_plus = shift_diagonal(u, 1.0);
  const CMatrix identity_minus = shift_diagonal(-u, 1.0);
  return kImag * identity_plus * inverse(identity_minus, tol);
}

CayleyPair make_cayley_pair(const CMatrix& a, const Tolerances& tol) {
  return CayleyPair{a, cayley(a, tol)};
}

std::optional<double> phase_coincidence(double a, double b, double c, double d,
                                        const Tolerances& tol) {
  const CMatrix h{{cdouble{a + d, 0.0}, cdouble{b, -c}},
                  {cdouble{b, c}, cdouble{a - d, 0.0}}};
  const CMatrix u = cayley(h, tol);
  const double scale = std::max(1.0, h.norm_max());

  const auto matches = [&](double phi) {
    const cdouble factor = std::polar(1.0, phi);
    return max_abs_diff(u, factor * h) <= tol.eq * scale;
  };

  const double candidate = -std::numbers::pi / 2.0;
  if (matches(candidate)) return candidate;
  // Grid fallback: -pi/2 is provably the only possible phase; scanning the
  // circle guards the implementation against that conclusion.
  for (int k = 0; k < 360; ++k) {
    const double phi = -std::numbers::pi + 2.0 * std::numbers::pi * k / 360.0;
    if (matches(phi)) return phi;
  }
  return std::nullopt;
}

}  // namespace ckron
