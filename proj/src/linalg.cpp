#include "quadlie/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadlie {

EchelonForm rref_with_pivots(Matrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(r, j), m(p, j));
    const Rational inv_pivot = Rational(1) / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv_pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

Matrix rref(const Matrix& m) { return rref_with_pivots(m).reduced; }

std::size_t rank(const Matrix& m) { return rref_with_pivots(m).pivots.size(); }

Rational det(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
  const std::size_t n = m.rows();
  Matrix a = m;
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(a(c, j), a(p, j));
      d = -d;
    }
    d *= a(c, c);
    const Rational inv_pivot = Rational(1) / a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      const Rational f = a(i, c) * inv_pivot;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return d;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto ech = rref_with_pivots(std::move(aug));
  for (std::size_t i = 0; i < n; ++i)
    if (ech.pivots.size() <= i || ech.pivots[i] != i) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
  return inv;
}

Subspace Subspace::zero(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    Vec v(ambient_dim);
    v[i] = 1;
    rows.push_back(std::move(v));
  }
  return span(ambient_dim, rows);
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  for (const auto& v : vectors)
    if (v.size() != ambient_dim) throw std::invalid_argument("Subspace::span: ambient mismatch");
  const auto ech = rref_with_pivots(Matrix::from_rows(vectors, ambient_dim));
  Subspace s;
  s.ambient_ = ambient_dim;
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) s.basis_.push_back(ech.reduced.row(i));
  s.pivots_ = ech.pivots;
  return s;
}

Vec Subspace::reduce(Vec v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace::reduce: ambient mismatch");
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational f = v[pivots_[i]];
    if (!f.is_zero()) vec_axpy(v, -f, basis_[i]);
  }
  return v;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const Vec& v) { return contains(v); });
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  Vec coeffs(basis_.size());
  Vec rem = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    coeffs[i] = rem[pivots_[i]];
    if (!coeffs[i].is_zero()) vec_axpy(rem, -coeffs[i], basis_[i]);
  }
  if (!vec_is_zero(rem)) return std::nullopt;
  return coeffs;
}

Subspace null_space(const Matrix& m) {
  const auto ech = rref_with_pivots(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(cols, basis);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("subspace_sum: ambient mismatch");
  std::vector<Vec> rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), rows);
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("subspace_intersection: ambient mismatch");
  const std::size_t n = a.ambient_dim();
  const std::size_t ra = a.dim(), rb = b.dim();
  if (ra == 0 || rb == 0) return Subspace::zero(n);
  // Solve A^T x = B^T y; kernel of [A^T | -B^T] parametrizes the intersection.
  Matrix stacked(n, ra + rb);
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < n; ++j) stacked(j, i) = a.basis()[i][j];
  for (std::size_t i = 0; i < rb; ++i)
    for (std::size_t j = 0; j < n; ++j) stacked(j, ra + i) = -b.basis()[i][j];
  const Subspace ker = null_space(stacked);
  std::vector<Vec> vectors;
  for (const auto& k : ker.basis()) {
    Vec v(n);
    for (std::size_t i = 0; i < ra; ++i) vec_axpy(v, k[i], a.basis()[i]);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(n, vectors);
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: size mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto ech = rref_with_pivots(std::move(aug));
  Vec x(a.cols());
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    if (ech.pivots[i] == a.cols()) return std::nullopt;  // inconsistent row 0 ... 0 | 1
    x[ech.pivots[i]] = ech.reduced(i, a.cols());
  }
  return x;
}

bool RowSpaceBuilder::insert(Vec row) {
  if (row.size() != width_) throw std::invalid_argument("RowSpaceBuilder: width mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational f = row[pivots_[i]];
    if (!f.is_zero()) vec_axpy(row, -f, rows_[i]);
  }
  std::size_t p = 0;
  while (p < width_ && row[p].is_zero()) ++p;
  if (p == width_) return false;
  const Rational inv_pivot = Rational(1) / row[p];
  for (auto& x : row) x *= inv_pivot;
  const auto at = std::upper_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  rows_.insert(rows_.begin() + at, std::move(row));
  pivots_.insert(pivots_.begin() + at, p);
  return true;
}

Subspace RowSpaceBuilder::row_space() const { return Subspace::span(width_, rows_); }

Subspace RowSpaceBuilder::kernel() const {
  return null_space(Matrix::from_rows(rows_, width_));
}

CongruenceDiagonalization congruence_diagonalize(const Matrix& g) {
  if (!g.is_symmetric()) throw std::invalid_argument("congruence_diagonalize: not symmetric");
  const std::size_t n = g.rows();
  Matrix a = g;
  Matrix s = Matrix::identity(n);

  // Column operation on a and s, mirrored as the row operation on a,
  // keeps a = S^T g S throughout.
  auto add_col = [&](std::size_t dst, std::size_t src, const Rational& f) {
    for (std::size_t i = 0; i < n; ++i) a(i, dst) += f * a(i, src);
    for (std::size_t i = 0; i < n; ++i) a(dst, i) += f * a(src, i);
    for (std::size_t i = 0; i < n; ++i) s(i, dst) += f * s(i, src);
  };
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < n; ++i) std::swap(a(i, x), a(i, y));
    for (std::size_t i = 0; i < n; ++i) std::swap(a(x, i), a(y, i));
    for (std::size_t i = 0; i < n; ++i) std::swap(s(i, x), s(i, y));
  };

  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t d = k + 1;
      while (d < n && a(d, d).is_zero()) ++d;
      if (d < n) {
        swap_cols(k, d);
      } else {
        std::size_t j = k + 1;
        while (j < n && a(k, j).is_zero()) ++j;
        if (j == n) continue;  // row/col k already clean: zero diagonal entry
        add_col(k, j, Rational(1));  // now a(k,k) = 2 a(k,j) != 0
      }
    }
    const Rational inv_pivot = Rational(1) / a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(k, i).is_zero()) continue;
      add_col(i, k, -a(k, i) * inv_pivot);
    }
  }

  CongruenceDiagonalization out;
  out.transform = std::move(s);
  out.diagonal.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.diagonal.push_back(a(i, i));
    if (a(i, i).sign() > 0) ++out.signature.positive;
    if (a(i, i).sign() < 0) ++out.signature.negative;
  }
  return out;
}

}  // namespace quadlie
