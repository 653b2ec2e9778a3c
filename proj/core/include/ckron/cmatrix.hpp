#pragma once

#include <cassert>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace ckron {

using cdouble = std::complex<double>;

/// Dense complex matrix, row-major storage.
class CMatrix {
public:
  CMatrix() = default;

  /// Zero-filled rows x cols matrix.
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, cdouble{0.0, 0.0}) {}

  /// Takes ownership of row-major entries; throws if the count does not
  /// match rows*cols or any entry is non-finite.
  CMatrix(std::size_t rows, std::size_t cols, std::vector<cdouble> entries);

  /// Row-of-rows construction, mostly for tests and small literals.
  CMatrix(std::initializer_list<std::initializer_list<cdouble>> rows);

  static CMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static CMatrix identity(std::size_t n);
  static CMatrix diagonal(const std::vector<cdouble>& values);
  static CMatrix diagonal(const std::vector<double>& values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return entries_.size(); }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return entries_.empty(); }

  cdouble& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return entries_[i * cols_ + j];
  }
  cdouble operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return entries_[i * cols_ + j];
  }

  const std::vector<cdouble>& entries() const { return entries_; }

  CMatrix transpose() const;
  CMatrix conj() const;
  CMatrix adjoint() const;

  cdouble trace() const;
  /// Largest entry magnitude.
  double norm_max() const;
  double norm_fro() const;

  /// True if every entry is finite in both components.
  bool all_finite() const;

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(cdouble scalar);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cdouble> entries_;
};

CMatrix operator+(CMatrix lhs, const CMatrix& rhs);
CMatrix operator-(CMatrix lhs, const CMatrix& rhs);
CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs);
CMatrix operator*(cdouble scalar, CMatrix m);
CMatrix operator*(CMatrix m, cdouble scalar);
CMatrix operator-(CMatrix m);

/// max |(A - B)(i,j)|; dimensions must agree.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// ||A - A*||_max <= tol_eq * max(1, ||A||_max)
bool is_hermitian(const CMatrix& a, double tol_eq);

}  // namespace ckron
