#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kg/scalar.hpp"
#include "kg/unipoly.hpp"

namespace kg {

struct SingularMatrix : std::runtime_error {
  SingularMatrix() : std::runtime_error("matrix is singular") {}
};

/// Dense matrix with exact entries (Q(i) scalars or polynomials in v).
template <class T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_)
      throw std::invalid_argument("matrix data size mismatch");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = T(1);
    return m;
  }
  static Matrix diagonal(const std::vector<T>& diag) {
    Matrix m(diag.size(), diag.size());
    for (std::size_t k = 0; k < diag.size(); ++k) m(k, k) = diag[k];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  Matrix conjugate() const {
    Matrix out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        out(r, c) = conj((*this)(r, c));
    return out;
  }

  Matrix conjugate_transpose() const { return conjugate().transpose(); }

  bool is_diagonal() const {
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (r != c && !(*this)(r, c).is_zero()) return false;
    return true;
  }

  std::vector<T> diagonal_entries() const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t k = 0; k < rows_ && k < cols_; ++k)
      out.push_back((*this)(k, k));
    return out;
  }

  T trace() const {
    T s{};
    for (std::size_t k = 0; k < rows_; ++k) s += (*this)(k, k);
    return s;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& ark = a(r, k);
        if (ark.is_zero()) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) {
          const T& bkc = b(k, c);
          if (bkc.is_zero()) continue;
          out(r, c) += ark * bkc;
        }
      }
    return out;
  }

  Matrix scaled(const GaussianRational& c) const {
    Matrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k)
      out.data_[k] = scale(data_[k], c);
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) {
    return !(a == b);
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_, cols_;
  std::vector<T> data_;
};

using Mat = Matrix<GaussianRational>;
using PolyMat = Matrix<UniPoly>;

// Exact inverse by Gauss-Jordan elimination over Q(i).
Mat inverse(const Mat& m);

// Coefficient of v^k, entry-wise.
Mat coefficient_matrix(const PolyMat& m, std::size_t k);

// Entry-wise lift of a scalar matrix to constant polynomials.
PolyMat to_poly(const Mat& m);

// First (row, col) where the two matrices differ, as human-readable text;
// empty when equal.
template <class T>
std::string first_difference(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return "shape mismatch";
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a(r, c) != b(r, c))
        return "entry (" + std::to_string(r) + "," + std::to_string(c) +
               "): " + a(r, c).to_string() + " != " + b(r, c).to_string();
  return {};
}

}  // namespace kg
