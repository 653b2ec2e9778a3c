#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace ckron {

/// Base class for every failure this library reports.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operand shapes do not fit the operation.
class DimensionMismatch : public Error {
public:
  using Error::Error;
};

/// Input exceeds the configured product-dimension cap.
class DimensionCap : public Error {
public:
  using Error::Error;
};

class NotHermitian : public Error {
public:
  using Error::Error;
};

class NotUnitary : public Error {
public:
  using Error::Error;
};

/// A pivot fell below the singularity threshold during elimination.
class Singular : public Error {
public:
  using Error::Error;
};

/// Eigensolver exceeded its sweep cap.
class NoConvergence : public Error {
public:
  using Error::Error;
};

/// The matrix (or scalar) has 1 in its spectrum, where the inverse
/// transform is undefined.
class UnitEigenvalue : public Error {
public:
  using Error::Error;
};

class NotUnitModulus : public Error {
public:
  using Error::Error;
};

/// The pair of Hermitian inputs lies outside the admissible domain:
/// some product of unit-circle eigenvalues equals 1. Carries the pair.
class OutsideDomain : public Error {
public:
  OutsideDomain(const std::string& what, std::complex<double> x, std::complex<double> y,
                double distance)
      : Error(what), x_(x), y_(y), distance_(distance) {}

  std::complex<double> x() const { return x_; }
  std::complex<double> y() const { return y_; }
  /// |x*y - 1| for the offending pair.
  double distance() const { return distance_; }

private:
  std::complex<double> x_;
  std::complex<double> y_;
  double distance_;
};

/// The rearranged matrix has a second independent direction, so no
/// Kronecker factorization exists. Carries the deviation residual.
class NotRankOne : public Error {
public:
  NotRankOne(const std::string& what, double residual) : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

private:
  double residual_;
};

/// The pair fails the factorability classification.
class NotFactorable : public Error {
public:
  using Error::Error;
};

/// No phase shift separates the factor spectra from 1.
class NoSafePhase : public Error {
public:
  using Error::Error;
};

class ZeroEigenvalue : public Error {
public:
  using Error::Error;
};

/// The companion quadratic has no real roots.
class NoRealCompanion : public Error {
public:
  using Error::Error;
};

/// Malformed matrix input (JSON interchange format).
class ParseError : public Error {
public:
  using Error::Error;
};

/// Two independent computation routes disagreed; indicates a defect, not
/// bad input.
class CrossCheckFailure : public Error {
public:
  using Error::Error;
};

}  // namespace ckron
