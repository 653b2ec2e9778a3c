#include "ckron/predicates.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ckron/cayley.hpp"
#include "ckron/errors.hpp"
#include "ckron/linalg.hpp"

namespace ckron {

double pair_identity_residual(double a, double b) { return a * b * (1.0 - a - b) - 1.0; }

std::vector<double> companion_eigenvalues(double a, const Tolerances& tol) {
  if (std::abs(a) <= tol.cluster) {
    throw ZeroEigenvalue("companion_eigenvalues: eigenvalue is zero within tolerance");
  }
  const double discriminant = a * a * (1.0 - a) * (1.0 - a) - 4.0 * a;
  if (discriminant < -tol.cluster) {
    throw NoRealCompanion("companion_eigenvalues: discriminant " + std::to_string(discriminant) +
                          " is negative");
  }
  if (std::abs(discriminant) <= tol.cluster) {
    return {(1.0 - a) / 2.0};  // double root of a b^2 - a(1-a) b + 1
  }

  // Stable quadratic roots for a b^2 - a(1-a) b + 1 = 0.
  const double b_coeff = -a * (1.0 - a);
  const double sqrt_disc = std::sqrt(discriminant);
  const double q = -0.5 * (b_coeff + std::copysign(sqrt_disc, b_coeff));
  std::vector<double> roots{q / a, 1.0 / q};
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

struct SpectralCondition {
  bool holds = false;
  std::optional<IdentityCase> matched_case;
};

/// The single-eigenvalue-plus-companions criterion over clustered spectra.
SpectralCondition spectral_condition(const std::vector<double>& da,
                                     const std::vector<double>& db, const Tolerances& tol) {
  const auto side_holds = [&tol](const std::vector<double>& single,
                                 const std::vector<double>& other) {
    if (single.size() != 1) return false;
    std::vector<double> roots;
    try {
      roots = companion_eigenvalues(single.front(), tol);
    } catch (const Error&) {
      return false;  // zero eigenvalue or no real companions
    }
    const double width = tol.cluster_width(
        std::max(spectral_radius(other), spectral_radius(roots)));
    for (double value : other) {
      bool matched = false;
      for (double root : roots) matched = matched || std::abs(value - root) <= width;
      if (!matched) return false;
    }
    return true;
  };

  if (side_holds(da, db)) return {true, IdentityCase::SingleA};
  if (side_holds(db, da)) return {true, IdentityCase::SingleB};
  return {false, std::nullopt};
}

std::vector<double> distinct_spectrum(const CMatrix& a, const Tolerances& tol) {
  return distinct_eigenvalues(hermitian_eig(a, tol).eigenvalues, tol);
}

void require_all_hermitian(const std::vector<CMatrix>& matrices, const Tolerances& tol,
                           const char* op) {
  if (matrices.empty()) {
    throw std::invalid_argument(std::string(op) + ": need at least one matrix");
  }
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    if (!is_hermitian(matrices[i], tol.eq)) {
      throw NotHermitian(std::string(op) + ": matrix " + std::to_string(i) +
                         " is not Hermitian within tolerance");
    }
  }
}

std::size_t capped_product_dimension(const std::vector<CMatrix>& matrices,
                                     std::size_t dimension_cap, const char* op) {
  std::size_t dim = 1;
  for (const auto& m : matrices) {
    dim *= m.rows();
    if (dim > dimension_cap) {
      throw DimensionCap(std::string(op) + ": product dimension exceeds cap " +
                         std::to_string(dimension_cap));
    }
  }
  return dim;
}

/// Sorted eigenvalues of a Kronecker product of Hermitian factors: all
/// products of the factor eigenvalues.
std::vector<double> product_spectrum(const std::vector<std::vector<double>>& spectra,
                                     std::size_t first, std::size_t last) {
  std::vector<double> values{1.0};
  for (std::size_t i = first; i < last; ++i) {
    std::vector<double> next;
    next.reserve(values.size() * spectra[i].size());
    for (double v : values)
      for (double w : spectra[i]) next.push_back(v * w);
    values = std::move(next);
  }
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace

KronIdentityVerdict check_kron_identity(const CMatrix& a, const CMatrix& b,
                                        const Tolerances& tol) {
  const std::vector<double> da = distinct_spectrum(a, tol);
  const std::vector<double> db = distinct_spectrum(b, tol);

  KronIdentityVerdict verdict;
  for (double av : da)
    for (double bv : db)
      verdict.residual = std::max(verdict.residual, std::abs(pair_identity_residual(av, bv)));

  const SpectralCondition spectral = spectral_condition(da, db, tol);
  verdict.matched_case = spectral.matched_case;

  verdict.direct_residual =
      max_abs_diff(cayley(kron(a, b), tol), kron(cayley(a, tol), cayley(b, tol)));
  verdict.holds = verdict.direct_residual <= tol.eq;

  if (verdict.holds != spectral.holds) {
    throw CrossCheckFailure(
        "check_kron_identity: spectral criterion says " + std::string(spectral.holds ? "holds" : "fails") +
        " but direct comparison says " + std::string(verdict.holds ? "holds" : "fails") +
        " (direct residual " + std::to_string(verdict.direct_residual) + ")");
  }
  return verdict;
}

const char* to_string(IdentityCase c) {
  switch (c) {
    case IdentityCase::SingleA: return "SingleA";
    case IdentityCase::SingleB: return "SingleB";
  }
  return "unknown";
}

MultipartiteResult multipartite_direct(const std::vector<CMatrix>& matrices,
                                       const Tolerances& tol, std::size_t dimension_cap) {
  require_all_hermitian(matrices, tol, "multipartite_direct");
  capped_product_dimension(matrices, dimension_cap, "multipartite_direct");

  CMatrix product = matrices.front();
  CMatrix transform_product = cayley(matrices.front(), tol);
  for (std::size_t i = 1; i < matrices.size(); ++i) {
    product = kron(product, matrices[i]);
    transform_product = kron(transform_product, cayley(matrices[i], tol));
  }

  MultipartiteResult result;
  result.residual = max_abs_diff(cayley(product, tol), transform_product);
  result.holds = result.residual <= tol.eq;
  return result;
}

bool multipartite_sufficient(const std::vector<CMatrix>& matrices, const Tolerances& tol,
                             std::size_t dimension_cap) {
  require_all_hermitian(matrices, tol, "multipartite_sufficient");
  capped_product_dimension(matrices, dimension_cap, "multipartite_sufficient");

  const std::size_t count = matrices.size();
  std::vector<std::vector<double>> spectra(count);
  for (std::size_t i = 0; i < count; ++i) {
    spectra[i] = hermitian_eig(matrices[i], tol).eigenvalues;
  }

  const auto link_holds = [&](const std::vector<double>& head,
                              const std::vector<double>& tail) {
    return spectral_condition(distinct_eigenvalues(head, tol),
                              distinct_eigenvalues(tail, tol), tol)
        .holds;
  };

  // Head-splitting chain: every suffix product peels its first factor off.
  bool left_chain = true;
  for (std::size_t j = 0; j + 1 < count && left_chain; ++j) {
    left_chain = link_holds(spectra[j], product_spectrum(spectra, j + 1, count));
  }

  // Prefix chain: every prefix product peels the leading factor off.
  bool right_chain = true;
  for (std::size_t j = 2; j <= count && right_chain; ++j) {
    right_chain = link_holds(spectra[0], product_spectrum(spectra, 1, j));
  }

  return left_chain || right_chain;
}

bool identity_power_equal(std::size_t m, std::size_t k) {
  if (m < 1 || k < 1) {
    throw std::invalid_argument("identity_power_equal: need m >= 1 and k >= 1");
  }
  const bool scalar_result = (k % 4 == 1);  // (-i)^k = -i exactly then

  constexpr std::size_t kDirectLimit = 1024;
  std::size_t dim = 1;
  bool direct_feasible = true;
  for (std::size_t i = 0; i < k && direct_feasible; ++i) {
    dim *= m;
    direct_feasible = dim <= kDirectLimit;
  }
  if (direct_feasible) {
    const Tolerances tol;
    const CMatrix unit = cayley(CMatrix::identity(m), tol);
    CMatrix power = unit;
    for (std::size_t i = 1; i < k; ++i) power = kron(power, unit);
    const bool direct_result =
        max_abs_diff(cayley(CMatrix::identity(dim), tol), power) <= tol.eq;
    if (direct_result != scalar_result) {
      throw CrossCheckFailure("identity_power_equal: direct computation disagrees with the "
                              "scalar parity criterion");
    }
  }
  return scalar_result;
}

}  // namespace ckron
