#include "ckron/kron_analogue.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ckron/cayley.hpp"
#include "ckron/errors.hpp"
#include "ckron/linalg.hpp"

namespace ckron {

CMatrix kron_sum(const CMatrix& a, const CMatrix& b) {
  if (!a.is_square() || !b.is_square()) {
    throw DimensionMismatch("kron_sum: both operands must be square");
  }
  return kron(a, CMatrix::identity(b.rows())) + kron(CMatrix::identity(a.rows()), b);
}

DomainVerdict in_domain(const CMatrix& a, const CMatrix& b, const Tolerances& tol) {
  const Spectrum sa = hermitian_eig(a, tol);
  const Spectrum sb = hermitian_eig(b, tol);

  DomainVerdict verdict;
  verdict.min_distance = std::numeric_limits<double>::infinity();
  cdouble worst_x{}, worst_y{};
  for (double av : sa.eigenvalues) {
    const cdouble x = scalar_cayley(av);
    for (double bv : sb.eigenvalues) {
      const cdouble y = scalar_cayley(bv);
      const double distance = std::abs(x * y - 1.0);
      if (distance < verdict.min_distance) {
        verdict.min_distance = distance;
        worst_x = x;
        worst_y = y;
      }
    }
  }
  verdict.in_domain = verdict.min_distance > tol.cluster;
  if (!verdict.in_domain) verdict.offending_pair = std::make_pair(worst_x, worst_y);
  return verdict;
}

CMatrix g_map(const CMatrix& a, const CMatrix& b, const Tolerances& tol, GVariant variant) {
  const DomainVerdict verdict = in_domain(a, b, tol);
  if (!verdict.in_domain) {
    const auto [x, y] = *verdict.offending_pair;
    throw OutsideDomain("g_map: eigenvalue product within " + std::to_string(verdict.min_distance) +
                            " of 1, transform product has a unit eigenvalue",
                        x, y, verdict.min_distance);
  }

  const CMatrix ua = cayley(a, tol);
  const CMatrix ub = cayley(b, tol);
  const CMatrix im = CMatrix::identity(a.rows());
  const CMatrix in = CMatrix::identity(b.rows());
  const cdouble i_unit{0.0, 1.0};

  if (variant == GVariant::primary) {
    const CMatrix lifted_ua = kron(ua.adjoint(), in);
    const CMatrix lifted_ub = kron(im, ub);
    return i_unit * inverse(lifted_ua - lifted_ub, tol) * (lifted_ua + lifted_ub);
  }
  const CMatrix lifted_ua = kron(ua, in);
  const CMatrix lifted_ub_adj = kron(im, ub.adjoint());
  return i_unit * inverse(lifted_ub_adj - lifted_ua, tol) * (lifted_ua + lifted_ub_adj);
}

}  // namespace ckron
