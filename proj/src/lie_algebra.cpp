#include "quadlie/lie_algebra.hpp"

#include <stdexcept>

namespace quadlie {

LieAlgebra::LieAlgebra(std::vector<std::string> labels, std::vector<std::vector<Vec>> c)
    : dim_(labels.size()), labels_(std::move(labels)), c_(std::move(c)) {
  if (c_.size() != dim_) throw std::invalid_argument("LieAlgebra: tensor rows != dim");
  for (std::size_t i = 0; i < dim_; ++i) {
    if (c_[i].size() != dim_) throw std::invalid_argument("LieAlgebra: tensor cols != dim");
    for (std::size_t j = 0; j < dim_; ++j)
      if (c_[i][j].size() != dim_)
        throw std::invalid_argument("LieAlgebra: bracket vector length != dim");
  }
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      if (c_[i][j] != vec_neg(c_[j][i]))
        throw std::invalid_argument("LieAlgebra: antisymmetry fails at (" + std::to_string(i) +
                                    "," + std::to_string(j) + ")");
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) labels.push_back("a" + std::to_string(i + 1));
  std::vector<std::vector<Vec>> c(dim, std::vector<Vec>(dim, Vec(dim)));
  return LieAlgebra(std::move(labels), std::move(c));
}

LieAlgebra LieAlgebra::from_brackets(std::vector<std::string> labels,
                                     const std::vector<BracketEntry>& brackets) {
  const std::size_t n = labels.size();
  std::vector<std::vector<Vec>> c(n, std::vector<Vec>(n, Vec(n)));
  for (const auto& b : brackets) {
    if (b.i >= b.j || b.j >= n)
      throw std::invalid_argument("LieAlgebra::from_brackets: need i < j < dim");
    if (b.v.size() != n)
      throw std::invalid_argument("LieAlgebra::from_brackets: bracket vector length != dim");
    c[b.i][b.j] = b.v;
    c[b.j][b.i] = vec_neg(b.v);
  }
  return LieAlgebra(std::move(labels), std::move(c));
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw std::invalid_argument("bracket: coordinate length != dim");
  Vec r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      vec_axpy(r, x[i] * y[j], c_[i][j]);
    }
  }
  return r;
}

Matrix LieAlgebra::ad(const Vec& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec col(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      if (!x[i].is_zero()) vec_axpy(col, x[i], c_[i][j]);
    for (std::size_t i = 0; i < dim_; ++i) m(i, j) = col[i];
  }
  return m;
}

Matrix LieAlgebra::ad_basis(std::size_t i) const { return ad(basis_vector(i)); }

Vec LieAlgebra::basis_vector(std::size_t i) const {
  Vec v(dim_);
  v[i] = 1;
  return v;
}

bool LieAlgebra::is_abelian() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (!vec_is_zero(c_[i][j])) return false;
  return true;
}

std::vector<std::array<std::size_t, 3>> check_jacobi(const LieAlgebra& g) {
  std::vector<std::array<std::size_t, 3>> bad;
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec jac = g.bracket(g.c(i, j), g.basis_vector(k));
        vec_axpy(jac, Rational(1), g.bracket(g.c(k, i), g.basis_vector(j)));
        vec_axpy(jac, Rational(1), g.bracket(g.c(j, k), g.basis_vector(i)));
        if (!vec_is_zero(jac)) bad.push_back({i, j, k});
      }
  return bad;
}

Subspace bracket_subspaces(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != g.dim() || b.ambient_dim() != g.dim())
    throw std::invalid_argument("bracket_subspaces: ambient mismatch");
  std::vector<Vec> spanning;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) spanning.push_back(g.bracket(x, y));
  return Subspace::span(g.dim(), spanning);
}

std::vector<Subspace> derived_series(const LieAlgebra& g) {
  std::vector<Subspace> series{Subspace::full(g.dim())};
  for (;;) {
    Subspace next = bracket_subspaces(g, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
    if (series.back().dim() == 0) break;
  }
  return series;
}

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
  const Subspace whole = Subspace::full(g.dim());
  std::vector<Subspace> series{whole};
  for (;;) {
    Subspace next = bracket_subspaces(g, whole, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
    if (series.back().dim() == 0) break;
  }
  return series;
}

namespace {

/// Rows of a matrix whose kernel is exactly s (the annihilator basis).
Matrix annihilator_matrix(const Subspace& s) {
  const Subspace ann = null_space(s.basis_matrix());
  return ann.basis_matrix();
}

}  // namespace

std::vector<Subspace> upper_central_series(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Subspace> series{Subspace::zero(n)};
  for (;;) {
    // Next term: {x : C [e_i, x] = 0 for all i}, C the annihilator of the
    // previous term.
    const Matrix c = annihilator_matrix(series.back());
    Matrix stacked(c.rows() * n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const Matrix block = c * g.ad_basis(i);
      for (std::size_t r = 0; r < c.rows(); ++r)
        for (std::size_t j = 0; j < n; ++j) stacked(i * c.rows() + r, j) = block(r, j);
    }
    Subspace next = null_space(stacked);
    if (next == series.back()) break;
    series.push_back(std::move(next));
    if (series.back().dim() == n) break;
  }
  return series;
}

Subspace center(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Matrix stacked(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix ad_i = g.ad_basis(i);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t j = 0; j < n; ++j) stacked(i * n + r, j) = ad_i(r, j);
  }
  return null_space(stacked);
}

Subspace derived_subalgebra(const LieAlgebra& g) {
  const Subspace whole = Subspace::full(g.dim());
  return bracket_subspaces(g, whole, whole);
}

bool is_solvable(const LieAlgebra& g) { return derived_series(g).back().dim() == 0; }

bool is_nilpotent(const LieAlgebra& g) { return lower_central_series(g).back().dim() == 0; }

IdealReport is_ideal(const LieAlgebra& g, const Subspace& s) {
  if (s.ambient_dim() != g.dim()) throw std::invalid_argument("is_ideal: ambient mismatch");
  IdealReport report;
  report.subspace = s;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (const auto& v : s.basis()) {
      Vec w = g.bracket(g.basis_vector(i), v);
      if (!s.contains(w)) report.witnesses.emplace_back(i, v);
    }
  report.is_ideal = report.witnesses.empty();
  return report;
}

StructureSummary structure_summary(const LieAlgebra& g) {
  StructureSummary out;
  const Subspace d = derived_subalgebra(g);
  out.derived_dim = d.dim();
  out.center_dim = center(g).dim();
  // Every subspace containing g^2 is an ideal, so codim(g^2) >= 2 yields
  // several maximal ideals and codim(g^2) = 1 leaves g^2 itself as the only
  // codimension-1 subspace containing g^2. Solvability rules out simple
  // quotients, making those the only maximal ideals.
  out.local = is_solvable(g) && d.dim() + 1 == g.dim() && is_ideal(g, d).is_ideal;
  return out;
}

LieAlgebra induced_subalgebra(const LieAlgebra& g, const Subspace& s,
                              const std::string& label_prefix) {
  if (s.ambient_dim() != g.dim())
    throw std::invalid_argument("induced_subalgebra: ambient mismatch");
  const std::size_t k = s.dim();
  std::vector<std::vector<Vec>> c(k, std::vector<Vec>(k, Vec(k)));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      const Vec w = g.bracket(s.basis()[a], s.basis()[b]);
      const auto coords = s.coordinates(w);
      if (!coords)
        throw std::invalid_argument("induced_subalgebra: subspace not closed under bracket");
      c[a][b] = *coords;
    }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back(label_prefix + std::to_string(i + 1));
  return LieAlgebra(std::move(labels), std::move(c));
}

LieAlgebra quotient_algebra(const LieAlgebra& g, const Subspace& ideal,
                            const std::string& label_prefix) {
  const auto report = is_ideal(g, ideal);
  if (!report.is_ideal) throw std::invalid_argument("quotient_algebra: subspace is not an ideal");
  const std::size_t n = g.dim();
  // Complement basis: unit vectors at the non-pivot coordinates of the ideal.
  std::vector<bool> is_pivot(n, false);
  for (auto p : ideal.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> rep;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) rep.push_back(j);
  const std::size_t k = rep.size();

  // Reduction mod the ideal lands in the complement coordinates.
  auto project = [&](const Vec& v) {
    const Vec r = ideal.reduce(v);
    Vec out(k);
    for (std::size_t a = 0; a < k; ++a) out[a] = r[rep[a]];
    return out;
  };

  std::vector<std::vector<Vec>> c(k, std::vector<Vec>(k, Vec(k)));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      c[a][b] = project(g.bracket(g.basis_vector(rep[a]), g.basis_vector(rep[b])));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back(label_prefix + std::to_string(i + 1));
  return LieAlgebra(std::move(labels), std::move(c));
}

bool is_heisenberg_type(const LieAlgebra& g) {
  const Subspace z = center(g);
  return z.dim() == 1 && z == derived_subalgebra(g);
}

bool is_lie_isomorphism(const Matrix& t, const LieAlgebra& from, const LieAlgebra& to) {
  if (from.dim() != to.dim() || t.rows() != from.dim() || t.cols() != from.dim()) return false;
  if (det(t).is_zero()) return false;
  for (std::size_t i = 0; i < from.dim(); ++i)
    for (std::size_t j = i + 1; j < from.dim(); ++j) {
      const Vec lhs = t.mul_vec(from.c(i, j));
      const Vec rhs = to.bracket(t.col(i), t.col(j));
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace quadlie
