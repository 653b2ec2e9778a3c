#include "ckron/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "ckron/errors.hpp"

namespace ckron {

namespace {

void require_square(const CMatrix& a, const char* op) {
  if (!a.is_square()) {
    throw DimensionMismatch(std::string(op) + ": matrix is " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + ", expected square");
  }
}

void require_hermitian(const CMatrix& a, const Tolerances& tol, const char* op) {
  if (!is_hermitian(a, tol.eq)) {
    throw NotHermitian(std::string(op) + ": input is not Hermitian within tolerance");
  }
}

/// LU factorization with partial pivoting, kept around for determinants and
/// repeated solves (inverse iteration).
class LuDecomposition {
public:
  explicit LuDecomposition(const CMatrix& a) : n_(a.rows()), lu_(a), perm_(n_) {
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});
    for (std::size_t k = 0; k < n_; ++k) {
      std::size_t pivot_row = k;
      double pivot_mag = std::abs(lu_(k, k));
      for (std::size_t r = k + 1; r < n_; ++r) {
        const double mag = std::abs(lu_(r, k));
        if (mag > pivot_mag) {
          pivot_mag = mag;
          pivot_row = r;
        }
      }
      min_pivot_ = std::min(min_pivot_, pivot_mag);
      if (pivot_mag == 0.0) {
        exactly_singular_ = true;
        return;
      }
      if (pivot_row != k) {
        for (std::size_t j = 0; j < n_; ++j) std::swap(lu_(k, j), lu_(pivot_row, j));
        std::swap(perm_[k], perm_[pivot_row]);
        sign_ = -sign_;
      }
      const cdouble inv_pivot = 1.0 / lu_(k, k);
      for (std::size_t r = k + 1; r < n_; ++r) {
        const cdouble factor = lu_(r, k) * inv_pivot;
        lu_(r, k) = factor;
        for (std::size_t j = k + 1; j < n_; ++j) lu_(r, j) -= factor * lu_(k, j);
      }
    }
  }

  bool exactly_singular() const { return exactly_singular_; }
  double min_pivot() const { return min_pivot_; }

  cdouble determinant() const {
    if (exactly_singular_) return 0.0;
    cdouble det = sign_;
    for (std::size_t i = 0; i < n_; ++i) det *= lu_(i, i);
    return det;
  }

  std::vector<cdouble> solve(const std::vector<cdouble>& rhs) const {
    std::vector<cdouble> x(n_);
    for (std::size_t i = 0; i < n_; ++i) x[i] = rhs[perm_[i]];
    for (std::size_t i = 1; i < n_; ++i) {
      for (std::size_t j = 0; j < i; ++j) x[i] -= lu_(i, j) * x[j];
    }
    for (std::size_t i = n_; i-- > 0;) {
      for (std::size_t j = i + 1; j < n_; ++j) x[i] -= lu_(i, j) * x[j];
      x[i] /= lu_(i, i);
    }
    return x;
  }

private:
  std::size_t n_;
  CMatrix lu_;
  std::vector<std::size_t> perm_;
  double sign_ = 1.0;
  double min_pivot_ = std::numeric_limits<double>::infinity();
  bool exactly_singular_ = false;
};

double vec_norm(const std::vector<cdouble>& v) {
  double s = 0.0;
  for (const auto& e : v) s += std::norm(e);
  return std::sqrt(s);
}

}  // namespace

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cdouble v = a(i, j);
      if (v == cdouble{0.0, 0.0}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = v * b(k, l);
        }
      }
    }
  }
  return out;
}

CMatrix direct_sum(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

CMatrix star_product(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != 2 || a.cols() != 2) {
    throw DimensionMismatch("star_product: first factor must be 2x2");
  }
  require_square(b, "star_product");
  const std::size_t n = b.rows();
  CMatrix out(n + 2, n + 2);
  out(0, 0) = a(0, 0);
  out(0, n + 1) = a(0, 1);
  out(n + 1, 0) = a(1, 0);
  out(n + 1, n + 1) = a(1, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i + 1, j + 1) = b(i, j);
  return out;
}

CMatrix commutation_matrix(std::size_t m, std::size_t n) {
  CMatrix p(m * n, m * n);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < n; ++k) p(k * m + j, j * n + k) = 1.0;
  return p;
}

Spectrum hermitian_eig(const CMatrix& a, const Tolerances& tol) {
  require_square(a, "hermitian_eig");
  require_hermitian(a, tol, "hermitian_eig");
  const std::size_t n = a.rows();

  // Work on the Hermitized copy so roundoff in the input cannot leak into
  // the rotations.
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = std::real(a(i, i));
    for (std::size_t j = i + 1; j < n; ++j) {
      const cdouble v = 0.5 * (a(i, j) + std::conj(a(j, i)));
      m(i, j) = v;
      m(j, i) = std::conj(v);
    }
  }
  CMatrix v = CMatrix::identity(n);

  const double threshold = tol.conv * a.norm_fro();
  constexpr int kSweepCap = 30;
  bool converged = false;
  for (int sweep = 0; sweep < kSweepCap && !converged; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(m(p, q)));
    if (off <= threshold) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cdouble b = m(p, q);
        const double abs_b = std::abs(b);
        if (abs_b <= 0.25 * threshold) continue;

        // Unitary plane rotation R with R_pp = R_qq = c, R_pq = s,
        // R_qp = -conj(s) that annihilates m(p,q) under R* M R.
        const double alpha = std::real(m(p, p));
        const double gamma = std::real(m(q, q));
        const cdouble phase = b / abs_b;
        const double tau = (alpha - gamma) / (2.0 * abs_b);
        const double t = (tau >= 0.0) ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                      : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const cdouble s = phase * (t * c);

        for (std::size_t r = 0; r < n; ++r) {  // R* applied to rows p, q
          const cdouble mp = m(p, r), mq = m(q, r);
          m(p, r) = c * mp - s * mq;
          m(q, r) = std::conj(s) * mp + c * mq;
        }
        for (std::size_t r = 0; r < n; ++r) {  // R applied to columns p, q
          const cdouble mp = m(r, p), mq = m(r, q);
          m(r, p) = c * mp - std::conj(s) * mq;
          m(r, q) = s * mp + c * mq;
          const cdouble vp = v(r, p), vq = v(r, q);
          v(r, p) = c * vp - std::conj(s) * vq;
          v(r, q) = s * vp + c * vq;
        }
        m(p, q) = 0.0;
        m(q, p) = 0.0;
        m(p, p) = std::real(m(p, p));
        m(q, q) = std::real(m(q, q));
      }
    }
  }
  if (!converged) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(m(p, q)));
    if (off > threshold) {
      throw NoConvergence("hermitian_eig: off-diagonal " + std::to_string(off) +
                          " above threshold after 30 sweeps");
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::real(m(x, x)) < std::real(m(y, y));
  });

  Spectrum s;
  s.eigenvalues.resize(n);
  s.eigenvectors = CMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    s.eigenvalues[j] = std::real(m(order[j], order[j]));
    for (std::size_t i = 0; i < n; ++i) s.eigenvectors(i, j) = v(i, order[j]);
  }
  return s;
}

CMatrix inverse(const CMatrix& a, const Tolerances& tol) {
  require_square(a, "inverse");
  const std::size_t n = a.rows();
  const double pivot_floor = tol.eq * a.norm_max();

  CMatrix work = a;
  CMatrix inv = CMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot_row = k;
    double pivot_mag = std::abs(work(k, k));
    for (std::size_t r = k + 1; r < n; ++r) {
      const double mag = std::abs(work(r, k));
      if (mag > pivot_mag) {
        pivot_mag = mag;
        pivot_row = r;
      }
    }
    if (pivot_mag <= pivot_floor) {
      throw Singular("inverse: pivot magnitude " + std::to_string(pivot_mag) +
                     " at column " + std::to_string(k) + " below threshold");
    }
    if (pivot_row != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(k, j), work(pivot_row, j));
        std::swap(inv(k, j), inv(pivot_row, j));
      }
    }
    const cdouble inv_pivot = 1.0 / work(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      work(k, j) *= inv_pivot;
      inv(k, j) *= inv_pivot;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k) continue;
      const cdouble factor = work(r, k);
      if (factor == cdouble{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < n; ++j) {
        work(r, j) -= factor * work(k, j);
        inv(r, j) -= factor * inv(k, j);
      }
    }
  }
  return inv;
}

CMatrix spectral_fn(const CMatrix& a, const std::function<cdouble(double)>& fn,
                    const Tolerances& tol) {
  const Spectrum s = hermitian_eig(a, tol);
  const std::size_t n = a.rows();
  CMatrix scaled = s.eigenvectors;
  for (std::size_t j = 0; j < n; ++j) {
    const cdouble f = fn(s.eigenvalues[j]);
    for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= f;
  }
  return scaled * s.eigenvectors.adjoint();
}

bool is_unitary(const CMatrix& u, const Tolerances& tol) {
  if (!u.is_square()) return false;
  return max_abs_diff(u.adjoint() * u, CMatrix::identity(u.rows())) <= tol.eq;
}

bool has_unit_eigenvalue(const CMatrix& u, const Tolerances& tol) {
  require_square(u, "has_unit_eigenvalue");
  const std::size_t n = u.rows();
  CMatrix shifted = u;
  for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= 1.0;

  const double shifted_norm = shifted.norm_max();
  if (shifted_norm <= tol.cluster) return true;  // U is essentially I

  const LuDecomposition lu(shifted);
  if (lu.exactly_singular() || lu.min_pivot() <= 1e-14 * shifted_norm) return true;

  // |det(U - I)| is the product of eigenvalue distances to 1; when it is
  // comfortably large no eigenvalue can be near 1.
  const double det_gate = tol.cluster * static_cast<double>(n) *
                          std::pow(shifted_norm, static_cast<double>(n - 1));
  if (std::abs(lu.determinant()) > det_gate) return false;

  // Inverse iteration on U - I pulls out the eigenvector whose eigenvalue
  // is nearest 1; the Rayleigh quotient then gives that eigenvalue.
  std::mt19937_64 rng(0x5eed5eed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<cdouble> x(n);
  for (auto& e : x) e = cdouble{dist(rng), dist(rng)};
  double inv_scale = 1.0 / vec_norm(x);
  for (auto& e : x) e *= inv_scale;

  double previous = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 60; ++iter) {
    std::vector<cdouble> y = lu.solve(x);
    const double ny = vec_norm(y);
    if (!std::isfinite(ny) || ny > 1e290) return true;
    inv_scale = 1.0 / ny;
    for (auto& e : y) e *= inv_scale;
    x = std::move(y);

    cdouble rayleigh = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      cdouble row = 0.0;
      for (std::size_t j = 0; j < n; ++j) row += u(i, j) * x[j];
      rayleigh += std::conj(x[i]) * row;
    }
    const double distance = std::abs(rayleigh - 1.0);
    if (std::abs(distance - previous) <= 1e-15 * std::max(1.0, distance)) {
      return distance <= tol.cluster;
    }
    previous = distance;
  }
  return previous <= tol.cluster;
}

std::vector<cdouble> unitary_eigenvalues(const CMatrix& u, const Tolerances& tol) {
  if (!is_unitary(u, tol)) {
    throw NotUnitary("unitary_eigenvalues: input is not unitary within tolerance");
  }
  const std::size_t n = u.rows();
  const CMatrix u_adj = u.adjoint();

  // U = X + iY with commuting Hermitian X, Y; diagonalize X, then Y inside
  // each eigenspace of X.
  CMatrix x(n, n), y(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      x(i, j) = 0.5 * (u(i, j) + u_adj(i, j));
      y(i, j) = cdouble{0.0, -0.5} * (u(i, j) - u_adj(i, j));
    }
  }
  const Spectrum sx = hermitian_eig(x, tol);
  const double width = tol.cluster_width(1.0);

  std::vector<cdouble> values;
  values.reserve(n);
  std::size_t start = 0;
  while (start < n) {
    std::size_t stop = start + 1;
    while (stop < n && sx.eigenvalues[stop] - sx.eigenvalues[stop - 1] <= width) ++stop;
    const std::size_t count = stop - start;

    double x_mean = 0.0;
    for (std::size_t j = start; j < stop; ++j) x_mean += sx.eigenvalues[j];
    x_mean /= static_cast<double>(count);

    if (count == 1) {
      cdouble quad = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        cdouble row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += y(i, j) * sx.eigenvectors(j, start);
        quad += std::conj(sx.eigenvectors(i, start)) * row;
      }
      values.emplace_back(x_mean, std::real(quad));
    } else {
      CMatrix basis(n, count);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < count; ++j) basis(i, j) = sx.eigenvectors(i, start + j);
      const CMatrix compressed = basis.adjoint() * (y * basis);
      const Spectrum sy = hermitian_eig(compressed, tol);
      for (double yv : sy.eigenvalues) values.emplace_back(x_mean, yv);
    }
    start = stop;
  }
  return values;
}

std::vector<double> distinct_eigenvalues(const std::vector<double>& sorted_values,
                                         const Tolerances& tol) {
  std::vector<double> out;
  if (sorted_values.empty()) return out;
  const double width = tol.cluster_width(spectral_radius(sorted_values));

  std::size_t start = 0;
  while (start < sorted_values.size()) {
    std::size_t stop = start + 1;
    while (stop < sorted_values.size() &&
           sorted_values[stop] - sorted_values[stop - 1] <= width) {
      ++stop;
    }
    double mean = 0.0;
    for (std::size_t j = start; j < stop; ++j) mean += sorted_values[j];
    out.push_back(mean / static_cast<double>(stop - start));
    start = stop;
  }
  return out;
}

double spectral_radius(const std::vector<double>& values) {
  double rho = 0.0;
  for (double v : values) rho = std::max(rho, std::abs(v));
  return rho;
}

}  // namespace ckron
