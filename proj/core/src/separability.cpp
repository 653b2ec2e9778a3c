#include "ckron/separability.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ckron/cayley.hpp"
#include "ckron/errors.hpp"
#include "ckron/linalg.hpp"

namespace ckron {

CoefficientGrid::CoefficientGrid(std::size_t m_, std::size_t n_, std::vector<cdouble> values_)
    : m(m_), n(n_), values(std::move(values_)) {
  if (values.size() != m * n) {
    throw DimensionMismatch("coefficient grid needs " + std::to_string(m * n) + " values, got " +
                            std::to_string(values.size()));
  }
  for (const auto& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::invalid_argument("coefficient grid entries must be finite");
    }
  }
}

bool grid_rank1_check(const CoefficientGrid& grid, const Tolerances& tol) {
  double max_mag = 0.0;
  for (const auto& v : grid.values) max_mag = std::max(max_mag, std::abs(v));
  const double bound = tol.eq * (1.0 + max_mag * max_mag);

  for (std::size_t p = 0; p + 1 < grid.m; ++p) {
    for (std::size_t r = p + 1; r < grid.m; ++r) {
      for (std::size_t q = 0; q + 1 < grid.n; ++q) {
        for (std::size_t s = q + 1; s < grid.n; ++s) {
          const cdouble cross = grid(p, q) * grid(r, s) - grid(p, s) * grid(r, q);
          if (std::abs(cross) > bound) return false;
        }
      }
    }
  }
  return true;
}

namespace {

void require_kron_shape(const CMatrix& m_mat, std::size_t m, std::size_t n, const char* op) {
  if (m == 0 || n == 0 || m_mat.rows() != m * n || m_mat.cols() != m * n) {
    throw DimensionMismatch(std::string(op) + ": matrix is " + std::to_string(m_mat.rows()) + "x" +
                            std::to_string(m_mat.cols()) + ", expected " + std::to_string(m * n) +
                            "x" + std::to_string(m * n));
  }
}

}  // namespace

CMatrix kron_rearrange(const CMatrix& m_mat, std::size_t m, std::size_t n) {
  require_kron_shape(m_mat, m, n, "kron_rearrange");
  CMatrix r(m * m, n * n);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t jp = 0; jp < m; ++jp)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t kp = 0; kp < n; ++kp)
          r(j * m + jp, k * n + kp) = m_mat(j * n + k, jp * n + kp);
  return r;
}

CMatrix kron_unrearrange(const CMatrix& r_mat, std::size_t m, std::size_t n) {
  if (m == 0 || n == 0 || r_mat.rows() != m * m || r_mat.cols() != n * n) {
    throw DimensionMismatch("kron_unrearrange: matrix is " + std::to_string(r_mat.rows()) + "x" +
                            std::to_string(r_mat.cols()) + ", expected " + std::to_string(m * m) +
                            "x" + std::to_string(n * n));
  }
  CMatrix m_mat(m * n, m * n);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t jp = 0; jp < m; ++jp)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t kp = 0; kp < n; ++kp)
          m_mat(j * n + k, jp * n + kp) = r_mat(j * m + jp, k * n + kp);
  return m_mat;
}

KronFactors kron_factorize(const CMatrix& m_mat, std::size_t m, std::size_t n,
                           const Tolerances& tol) {
  require_kron_shape(m_mat, m, n, "kron_factorize");
  const CMatrix r = kron_rearrange(m_mat, m, n);

  std::size_t pivot_i = 0, pivot_j = 0;
  double pivot_mag = 0.0;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    for (std::size_t j = 0; j < r.cols(); ++j) {
      const double mag = std::abs(r(i, j));
      if (mag > pivot_mag) {
        pivot_mag = mag;
        pivot_i = i;
        pivot_j = j;
      }
    }
  }
  if (pivot_mag == 0.0) {
    return KronFactors{CMatrix::zero(m, m), CMatrix::zero(n, n)};  // zero factorizes as zero
  }

  // Rank-one extraction through the pivot row/column; the deviation of the
  // pivot-predicted entries from R is the rank-one residual.
  const cdouble pivot = r(pivot_i, pivot_j);
  double residual = 0.0;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    for (std::size_t j = 0; j < r.cols(); ++j) {
      const cdouble predicted = r(i, pivot_j) * r(pivot_i, j) / pivot;
      residual = std::max(residual, std::abs(r(i, j) - predicted));
    }
  }
  if (residual > tol.eq * m_mat.norm_fro()) {
    throw NotRankOne("kron_factorize: rearrangement deviates from rank one by " +
                         std::to_string(residual),
                     residual);
  }

  CMatrix left(m, m), right(n, n);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t jp = 0; jp < m; ++jp) left(j, jp) = r(j * m + jp, pivot_j);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t kp = 0; kp < n; ++kp) right(k, kp) = r(pivot_i, k * n + kp) / pivot;

  // Normalize: ||left||_F = sqrt(m), then rotate the joint phase so the
  // largest entry of the left factor is real positive.
  const double scale = std::sqrt(static_cast<double>(m)) / left.norm_fro();
  left *= scale;
  right *= 1.0 / scale;

  cdouble lead = 0.0;
  double lead_mag = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double mag = std::abs(left(i, j));
      if (mag > lead_mag) {
        lead_mag = mag;
        lead = left(i, j);
      }
    }
  }
  const cdouble phase = lead / lead_mag;
  left *= std::conj(phase);
  right *= phase;
  return KronFactors{left, right};
}

FactorClassification classify_factorability(const CMatrix& a, const CMatrix& b,
                                            const Tolerances& tol) {
  const Spectrum sa = hermitian_eig(a, tol);
  const Spectrum sb = hermitian_eig(b, tol);

  FactorClassification out;
  out.distinct_eigenvalues_a = distinct_eigenvalues(sa.eigenvalues, tol);
  out.distinct_eigenvalues_b = distinct_eigenvalues(sb.eigenvalues, tol);
  const auto& da = out.distinct_eigenvalues_a;
  const auto& db = out.distinct_eigenvalues_b;

  for (std::size_t p = 0; p + 1 < da.size(); ++p)
    for (std::size_t r = p + 1; r < da.size(); ++r)
      for (std::size_t q = 0; q + 1 < db.size(); ++q)
        for (std::size_t s = q + 1; s < db.size(); ++s) {
          const double lhs =
              (da[p] - da[r]) * (db[q] - db[s]) * (da[p] * da[r] * db[q] * db[s] - 1.0);
          out.residual = std::max(out.residual, std::abs(lhs));
        }

  if (da.size() == 1) {
    out.verdict = FactorVerdict::SingleSpectrumA;
  } else if (db.size() == 1) {
    out.verdict = FactorVerdict::SingleSpectrumB;
  } else if (da.size() == 2 && db.size() == 2 &&
             std::abs(da[0] * da[1] * db[0] * db[1] - 1.0) <= tol.cluster) {
    out.verdict = FactorVerdict::TwoByTwoUnitProduct;
  } else {
    out.verdict = FactorVerdict::NotFactorable;
  }
  return out;
}

const char* to_string(FactorVerdict verdict) {
  switch (verdict) {
    case FactorVerdict::SingleSpectrumA: return "SingleSpectrumA";
    case FactorVerdict::SingleSpectrumB: return "SingleSpectrumB";
    case FactorVerdict::TwoByTwoUnitProduct: return "TwoByTwoUnitProduct";
    case FactorVerdict::NotFactorable: return "NotFactorable";
  }
  return "unknown";
}

namespace {

double angle_in_turn(cdouble z) {
  double a = std::arg(z);
  if (a < 0.0) a += 2.0 * std::numbers::pi;
  return a;
}

/// Midpoint of the largest gap the angles leave free on the circle, and the
/// gap size.
std::pair<double, double> largest_gap_midpoint(std::vector<double> angles) {
  std::sort(angles.begin(), angles.end());
  double best_gap = 0.0;
  double best_mid = 0.0;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const double next =
        (i + 1 < angles.size()) ? angles[i + 1] : angles[0] + 2.0 * std::numbers::pi;
    const double gap = next - angles[i];
    if (gap > best_gap) {
      best_gap = gap;
      best_mid = angles[i] + 0.5 * gap;
    }
  }
  if (best_mid >= 2.0 * std::numbers::pi) best_mid -= 2.0 * std::numbers::pi;
  return {best_mid, best_gap};
}

}  // namespace

KronFactors hermitian_refactor(const CMatrix& a, const CMatrix& b, const Tolerances& tol) {
  const FactorClassification cls = classify_factorability(a, b, tol);
  if (cls.verdict == FactorVerdict::NotFactorable) {
    throw NotFactorable("hermitian_refactor: transform of the product is not Kronecker-factorable");
  }

  const std::size_t m = a.rows();
  const std::size_t n = b.rows();
  const CMatrix u = cayley(kron(a, b), tol);
  KronFactors factors = kron_factorize(u, m, n, tol);

  // kron(left, right) unitary forces left*left = s*I; rescale both factors to
  // unitary proper. The normalization above already lands s at 1, but keep
  // this independent of that convention.
  const double s = factors.left.norm_fro() / std::sqrt(static_cast<double>(m));
  factors.left *= 1.0 / s;
  factors.right *= s;

  // Angles theta that would park an eigenvalue of either shifted factor at 1.
  std::vector<double> forbidden;
  for (const cdouble& c : unitary_eigenvalues(factors.left, tol))
    forbidden.push_back(angle_in_turn(std::conj(c)));
  for (const cdouble& d : unitary_eigenvalues(factors.right, tol))
    forbidden.push_back(angle_in_turn(d));

  const auto [theta, gap] = largest_gap_midpoint(std::move(forbidden));
  if (gap <= 10.0 * tol.cluster) {
    throw NoSafePhase("hermitian_refactor: largest free angular gap is " + std::to_string(gap));
  }

  const cdouble rotation = std::polar(1.0, theta);
  return KronFactors{inverse_cayley(rotation * factors.left, tol),
                     inverse_cayley(std::conj(rotation) * factors.right, tol)};
}

}  // namespace ckron
