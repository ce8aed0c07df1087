#include "quadlie/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace quadlie {

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_add: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_sub: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_scale(const Rational& s, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

Vec vec_neg(const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

Rational vec_dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_dot: size mismatch");
  Rational r;
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

void vec_axpy(Vec& y, const Rational& s, const Vec& x) {
  if (y.size() != x.size()) throw std::invalid_argument("vec_axpy: size mismatch");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += s * x[i];
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  e_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
    for (const auto& x : r) e_.push_back(x);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Matrix Matrix::parse(const std::vector<std::vector<std::string>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("Matrix::parse: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational::parse(rows[i][j]);
  }
  return m;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(e_.begin() + static_cast<long>(i * cols_), e_.begin() + static_cast<long>((i + 1) * cols_));
}

Vec Matrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Matrix::set_row(std::size_t i, const Vec& v) {
  if (v.size() != cols_) throw std::invalid_argument("Matrix::set_row: size mismatch");
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Rational Matrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("Matrix::trace: not square");
  Rational r;
  for (std::size_t i = 0; i < rows_; ++i) r += (*this)(i, i);
  return r;
}

bool Matrix::is_zero() const { return vec_is_zero(e_); }

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix+: shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix-: shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Matrix*: shape mismatch");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Rational& b = o(k, j);
        if (!b.is_zero()) r(i, j) += a * b;
      }
    }
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& x : r.e_) x = -x;
  return r;
}

Matrix operator*(const Rational& s, const Matrix& m) {
  Matrix r = m;
  for (auto& x : r.e_) x *= s;
  return r;
}

Matrix Matrix::commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Vec Matrix::mul_vec(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("Matrix::mul_vec: size mismatch");
  Vec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational acc;
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& a = (*this)(i, j);
      if (!a.is_zero() && !v[j].is_zero()) acc += a * v[j];
    }
    r[i] = acc;
  }
  return r;
}

Matrix Matrix::from_vectorized(std::size_t rows, std::size_t cols, const Vec& v) {
  if (v.size() != rows * cols) throw std::invalid_argument("Matrix::from_vectorized: size mismatch");
  Matrix m(rows, cols);
  m.e_ = v;
  return m;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "[") << (*this)(i, j).str();
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

}  // namespace quadlie
