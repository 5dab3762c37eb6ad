#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qstack/error.hpp"
#include "qstack/field.hpp"

namespace qstack {

/// Dense row-major matrix over a field. 0 x n and n x 0 matrices are legal
/// and model maps into or out of the zero space.
template <Field F>
class Matrix {
 public:
  using Element = typename F::Element;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(const F& field, std::size_t rows, std::size_t cols,
                          std::vector<Element> entries) {
    if (entries.size() != rows * cols) {
      throw DimensionMismatch("matrix entry count does not match " + std::to_string(rows) + "x" +
                              std::to_string(cols));
    }
    Matrix m(field, rows, cols);
    m.data_ = std::move(entries);
    return m;
  }

  const F& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }

  Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Element>& entries() noexcept { return data_; }
  const std::vector<Element>& entries() const noexcept { return data_; }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!field_.is_zero(x)) return false;
    }
    return true;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!field_.equal((*this)(i, j), i == j ? field_.one() : field_.zero())) return false;
      }
    }
    return true;
  }

  /// Entrywise equality with no tolerance; the field's `equal` is not used.
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

template <Field F>
void require_same_shape(const Matrix<F>& a, const Matrix<F>& b, const char* op) {
  require_same_ring(a.field(), b.field());
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(op) + ": shapes " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()) + " differ");
  }
}

/// out = a * b, reusing out's storage. out must already be a.rows() x b.cols().
template <Field F>
void multiply_into(Matrix<F>& out, const Matrix<F>& a, const Matrix<F>& b) {
  const F& k = a.field();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      auto acc = k.zero();
      for (std::size_t l = 0; l < a.cols(); ++l) acc = k.add(acc, k.mul(a(i, l), b(l, j)));
      out(i, j) = acc;
    }
  }
}

template <Field F>
Matrix<F> multiply(const Matrix<F>& a, const Matrix<F>& b) {
  require_same_ring(a.field(), b.field());
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("multiply: inner dimensions " + std::to_string(a.cols()) + " and " +
                            std::to_string(b.rows()) + " differ");
  }
  Matrix<F> out(a.field(), a.rows(), b.cols());
  multiply_into(out, a, b);
  return out;
}

template <Field F>
Matrix<F> add(const Matrix<F>& a, const Matrix<F>& b) {
  require_same_shape(a, b, "add");
  Matrix<F> out = a;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out.entries()[i] = a.field().add(a.entries()[i], b.entries()[i]);
  }
  return out;
}

template <Field F>
Matrix<F> subtract(const Matrix<F>& a, const Matrix<F>& b) {
  require_same_shape(a, b, "subtract");
  Matrix<F> out = a;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out.entries()[i] = a.field().sub(a.entries()[i], b.entries()[i]);
  }
  return out;
}

template <Field F>
Matrix<F> scale(const typename F::Element& lambda, const Matrix<F>& a) {
  Matrix<F> out = a;
  for (auto& x : out.entries()) x = a.field().mul(lambda, x);
  return out;
}

/// Kronecker product; the right factor's index runs fastest.
template <Field F>
Matrix<F> kronecker(const Matrix<F>& a, const Matrix<F>& b) {
  require_same_ring(a.field(), b.field());
  const F& k = a.field();
  Matrix<F> out(k, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
          out(i * b.rows() + r, j * b.cols() + c) = k.mul(a(i, j), b(r, c));
        }
      }
    }
  }
  return out;
}

/// Block-diagonal direct sum diag(a, b).
template <Field F>
Matrix<F> direct_sum(const Matrix<F>& a, const Matrix<F>& b) {
  require_same_ring(a.field(), b.field());
  Matrix<F> out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  }
  return out;
}

/// Gauss-Jordan inverse; nullopt when singular. For doubles, partial pivoting
/// with pivots at or below the field tolerance treated as zero.
template <Field F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const F& k = a.field();
  const std::size_t n = a.rows();
  Matrix<F> work = a;
  Matrix<F> inv = Matrix<F>::identity(k, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    double best = 0.0;
    for (std::size_t r = col; r < n; ++r) {
      if (k.is_zero(work(r, col))) continue;
      double mag = k.magnitude(work(r, col));
      if (pivot == n || (!F::exact && mag > best)) {
        pivot = r;
        best = mag;
        if (F::exact) break;
      }
    }
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(pivot, j), work(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const auto pinv = k.inv(work(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      work(col, j) = k.mul(work(col, j), pinv);
      inv(col, j) = k.mul(inv(col, j), pinv);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || k.is_zero(work(r, col))) continue;
      const auto factor = work(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        work(r, j) = k.sub(work(r, j), k.mul(factor, work(col, j)));
        inv(r, j) = k.sub(inv(r, j), k.mul(factor, inv(col, j)));
      }
    }
  }
  return inv;
}

/// Frobenius norm of a - b (entry magnitudes for exact rings are 0/1 so the
/// value is only meaningful as "zero or not" there).
template <Field F>
double frobenius_distance(const Matrix<F>& a, const Matrix<F>& b) {
  require_same_shape(a, b, "frobenius_distance");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if constexpr (F::exact) {
      if (!a.field().equal(a.entries()[i], b.entries()[i])) sum += 1.0;
    } else {
      const double d = a.entries()[i] - b.entries()[i];
      sum += d * d;
    }
  }
  return std::sqrt(sum);
}

template <Field F>
double frobenius_norm(const Matrix<F>& a) {
  return frobenius_distance(a, Matrix<F>(a.field(), a.rows(), a.cols()));
}

/// Exact equality over exact rings; Frobenius residual <= tol over doubles.
template <Field F>
bool agrees(const Matrix<F>& a, const Matrix<F>& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  if constexpr (F::exact) {
    return a.entries() == b.entries();
  } else {
    return frobenius_distance(a, b) <= tol;
  }
}

}  // namespace qstack
