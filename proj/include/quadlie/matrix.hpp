#ifndef QUADLIE_MATRIX_HPP
#define QUADLIE_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "quadlie/rational.hpp"

namespace quadlie {

using Vec = std::vector<Rational>;

bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& s, const Vec& v);
Vec vec_neg(const Vec& v);
Rational vec_dot(const Vec& a, const Vec& b);
/// y += s * x
void vec_axpy(Vec& y, const Rational& s, const Vec& x);

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  /// Parses entries given as "p/q" strings, row by row.
  static Matrix parse(const std::vector<std::vector<std::string>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);

  Matrix transpose() const;
  Rational trace() const;
  bool is_zero() const;
  bool is_symmetric() const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator-() const;
  friend Matrix operator*(const Rational& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  /// A*B - B*A.
  static Matrix commutator(const Matrix& a, const Matrix& b);

  Vec mul_vec(const Vec& v) const;

  /// Row-major flattening (and its inverse), used to treat n x n matrices
  /// as vectors of the n^2-dimensional matrix space.
  Vec vectorize() const { return e_; }
  static Matrix from_vectorized(std::size_t rows, std::size_t cols, const Vec& v);

  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Vec e_;
};

}  // namespace quadlie

#endif  // QUADLIE_MATRIX_HPP
