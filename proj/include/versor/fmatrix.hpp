#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "versor/errors.hpp"
#include "versor/field.hpp"
#include "versor/multivector.hpp"

namespace versor {

// Dense matrix over the scalar field. Small (degree <= 8 here), exact.
class FMatrix {
 public:
  FMatrix() : rows_(0), cols_(0) {}
  FMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), m_(rows * cols) {}

  static FMatrix identity(size_t n) {
    FMatrix I(n, n);
    for (size_t i = 0; i < n; ++i) I.at(i, i) = FieldScalar(1);
    return I;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  FieldScalar& at(size_t i, size_t j) { return m_[i * cols_ + j]; }
  const FieldScalar& at(size_t i, size_t j) const { return m_[i * cols_ + j]; }

  void set_col(size_t j, const Vec& v) {
    for (size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
  }
  Vec col(size_t j) const {
    Vec v(rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
  }

  FieldScalar trace() const {
    FieldScalar t;
    for (size_t i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
    return t;
  }

  FMatrix transpose() const {
    FMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend FMatrix operator*(const FMatrix& a, const FMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
    FMatrix c(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        if (a.at(i, k).is_zero()) continue;
        for (size_t j = 0; j < b.cols_; ++j)
          c.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    return c;
  }

  Vec operator*(const Vec& v) const {
    if (cols_ != v.size()) throw DomainError("matrix-vector shape mismatch");
    Vec r(rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
  }

  friend bool operator==(const FMatrix& a, const FMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.m_ == b.m_;
  }
  friend bool operator!=(const FMatrix& a, const FMatrix& b) {
    return !(a == b);
  }

  std::string str() const {
    std::string s;
    for (size_t i = 0; i < rows_; ++i) {
      s += "[ ";
      for (size_t j = 0; j < cols_; ++j) {
        if (j) s += ", ";
        s += at(i, j).str();
      }
      s += " ]\n";
    }
    return s;
  }

 private:
  size_t rows_, cols_;
  std::vector<FieldScalar> m_;
};

}  // namespace versor
