#pragma once

#include <algorithm>
#include <stdexcept>

namespace ckron {

/// Numeric comparison contract shared by every operation.
///
/// eq      relative matrix-equality threshold
/// cluster eigenvalue-clustering threshold for counting distinct eigenvalues,
///         relative to the spectral radius with an absolute floor of 1e-12
/// conv    eigensolver off-diagonal convergence threshold
struct Tolerances {
  double eq = 1e-9;
  double cluster = 1e-8;
  double conv = 1e-13;

  /// All thresholds scaled by the same factor; used by the CLI --tol flag.
  Tolerances scaled(double factor) const {
    return Tolerances{eq * factor, cluster * factor, conv * factor};
  }

  /// Width used when merging eigenvalues into distinct clusters.
  double cluster_width(double spectral_radius) const {
    return std::max(cluster * std::max(1.0, spectral_radius), 1e-12);
  }

  /// Throws std::invalid_argument unless all thresholds are positive
  /// and conv <= eq.
  void validate() const {
    if (!(eq > 0.0) || !(cluster > 0.0) || !(conv > 0.0)) {
      throw std::invalid_argument("tolerances must be strictly positive");
    }
    if (conv > eq) {
      throw std::invalid_argument("convergence tolerance must not exceed equality tolerance");
    }
  }
};

}  // namespace ckron
