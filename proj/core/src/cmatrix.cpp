#include "ckron/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "ckron/errors.hpp"

namespace ckron {

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<cdouble> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionMismatch("entry count " + std::to_string(entries_.size()) +
                            " does not match " + std::to_string(rows_) + "x" +
                            std::to_string(cols_));
  }
  if (!all_finite()) {
    throw std::invalid_argument("matrix entries must be finite");
  }
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cdouble>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw DimensionMismatch("ragged initializer rows");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  if (!all_finite()) {
    throw std::invalid_argument("matrix entries must be finite");
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(const std::vector<cdouble>& values) {
  CMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

CMatrix CMatrix::diagonal(const std::vector<double>& values) {
  CMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

CMatrix CMatrix::transpose() const {
  CMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

CMatrix CMatrix::conj() const {
  CMatrix c(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) c.entries_[i] = std::conj(entries_[i]);
  return c;
}

CMatrix CMatrix::adjoint() const {
  CMatrix a(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) a(j, i) = std::conj((*this)(i, j));
  return a;
}

cdouble CMatrix::trace() const {
  cdouble t = 0.0;
  const std::size_t n = std::min(rows_, cols_);
  for (std::size_t i = 0; i < n; ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::norm_max() const {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, std::abs(e));
  return m;
}

double CMatrix::norm_fro() const {
  double s = 0.0;
  for (const auto& e : entries_) s += std::norm(e);
  return std::sqrt(s);
}

bool CMatrix::all_finite() const {
  for (const auto& e : entries_) {
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
  }
  return true;
}

namespace {

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(op) + ": " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
}

}  // namespace

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  require_same_shape(*this, other, "add");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  require_same_shape(*this, other, "subtract");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(cdouble scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

CMatrix operator+(CMatrix lhs, const CMatrix& rhs) { return lhs += rhs; }
CMatrix operator-(CMatrix lhs, const CMatrix& rhs) { return lhs -= rhs; }

CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw DimensionMismatch("multiply: " + std::to_string(lhs.rows()) + "x" +
                            std::to_string(lhs.cols()) + " times " + std::to_string(rhs.rows()) +
                            "x" + std::to_string(rhs.cols()));
  }
  CMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const cdouble v = lhs(i, k);
      if (v == cdouble{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += v * rhs(k, j);
    }
  }
  return out;
}

CMatrix operator*(cdouble scalar, CMatrix m) { return m *= scalar; }
CMatrix operator*(CMatrix m, cdouble scalar) { return m *= scalar; }
CMatrix operator-(CMatrix m) { return m *= cdouble{-1.0, 0.0}; }

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "compare");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

bool is_hermitian(const CMatrix& a, double tol_eq) {
  if (!a.is_square()) return false;
  double dev = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i; j < a.cols(); ++j) {
      dev = std::max(dev, std::abs(a(i, j) - std::conj(a(j, i))));
    }
  }
  return dev <= tol_eq * std::max(1.0, a.norm_max());
}

}  // namespace ckron
