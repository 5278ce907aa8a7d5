#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace adelic {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q" (q != 0). Result is canonicalized.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Rational make_rational(long num, long den = 1);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
/// H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0.
Rational harmonic(unsigned n);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
/// Nearest integer, ties rounded towards +infinity.
Integer round_of(const Rational& q);

/// Dense row-major matrix with value semantics.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      for (const auto& v : row) data_.push_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  void set_row(std::size_t i, const std::vector<T>& r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_square() const noexcept { return rows_ == cols_; }

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntMatrix = Matrix<Integer>;

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

RationalMatrix to_rational(const IntMatrix& m);

/// Determinant by exact Gaussian elimination.
Rational determinant(const RationalMatrix& m);
Integer determinant(const IntMatrix& m);
/// Inverse; throws DomainError when singular.
RationalMatrix inverse(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);

/// x^T G y for integer coordinate vectors.
Rational bilinear(const RationalMatrix& gram, const IntVector& x, const IntVector& y);
Rational quadratic_form(const RationalMatrix& gram, const IntVector& x);
Rational quadratic_form(const RationalMatrix& gram, const RationalVector& x);

/// B G B^T for an integer row basis B.
RationalMatrix restrict_gram(const RationalMatrix& gram, const IntMatrix& basis);

/// Leading principal minors all positive and matrix symmetric.
bool is_symmetric_positive_definite(const RationalMatrix& m);

}  // namespace adelic
