#include "quadlie/forms.hpp"

#include <stdexcept>

namespace quadlie {

BilinearForm::BilinearForm(Matrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) throw std::invalid_argument("BilinearForm: gram not square");
}

Rational BilinearForm::eval(const Vec& x, const Vec& y) const {
  return vec_dot(x, gram_.mul_vec(y));
}

bool BilinearForm::is_skew() const {
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    for (std::size_t j = i; j < gram_.cols(); ++j)
      if (gram_(i, j) != -gram_(j, i)) return false;
  return true;
}

BilinearForm BilinearForm::symmetric_part() const {
  const Rational half(1, 2);
  return BilinearForm(half * (gram_ + gram_.transpose()));
}

BilinearForm BilinearForm::skew_part() const {
  const Rational half(1, 2);
  return BilinearForm(half * (gram_ - gram_.transpose()));
}

std::vector<std::array<std::size_t, 3>> check_invariance(const LieAlgebra& g,
                                                         const BilinearForm& phi) {
  if (phi.dim() != g.dim()) throw std::invalid_argument("check_invariance: dim mismatch");
  const std::size_t n = g.dim();
  std::vector<std::array<std::size_t, 3>> bad;
  // Cache G e_k columns; phi([e_i,e_j], e_k) = c(i,j) . (G e_k).
  std::vector<Vec> gcol(n);
  for (std::size_t k = 0; k < n; ++k) gcol[k] = phi.gram().col(k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rational v = vec_dot(g.c(i, j), gcol[k]);
        const Vec& cik = g.c(i, k);
        for (std::size_t q = 0; q < n; ++q)
          if (!cik[q].is_zero()) v += phi.gram()(j, q) * cik[q];
        if (!v.is_zero()) bad.push_back({i, j, k});
      }
  return bad;
}

InvariantFormSpace::InvariantFormSpace(const LieAlgebra& g, std::vector<BilinearForm> basis,
                                       std::vector<BilinearForm> sym_basis,
                                       std::vector<BilinearForm> skew_basis)
    : algebra_(g),
      basis_(std::move(basis)),
      sym_basis_(std::move(sym_basis)),
      skew_basis_(std::move(skew_basis)) {}

InvariantFormSpace invariant_forms(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  // Unknowns: vec(B) row-major. Equation for the ordered triple (i,j,k):
  //   sum_p c(i,j)_p B[p][k] + sum_q c(i,k)_q B[j][q] = 0.
  RowSpaceBuilder rows(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& cij = g.c(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        const Vec& cik = g.c(i, k);
        Vec eq(n * n);
        bool nonzero = false;
        for (std::size_t p = 0; p < n; ++p)
          if (!cij[p].is_zero()) {
            eq[p * n + k] += cij[p];
            nonzero = true;
          }
        for (std::size_t q = 0; q < n; ++q)
          if (!cik[q].is_zero()) {
            eq[j * n + q] += cik[q];
            nonzero = true;
          }
        if (nonzero) rows.insert(std::move(eq));
      }
    }
  const Subspace solutions = rows.kernel();

  std::vector<BilinearForm> basis;
  std::vector<Vec> sym_vecs, skew_vecs;
  for (const auto& v : solutions.basis()) {
    BilinearForm b(Matrix::from_vectorized(n, n, v));
    sym_vecs.push_back(b.symmetric_part().gram().vectorize());
    skew_vecs.push_back(b.skew_part().gram().vectorize());
    basis.push_back(std::move(b));
  }
  std::vector<BilinearForm> sym_basis, skew_basis;
  const Subspace sym_span = Subspace::span(n * n, sym_vecs);
  const Subspace skew_span = Subspace::span(n * n, skew_vecs);
  for (const auto& v : sym_span.basis()) sym_basis.emplace_back(Matrix::from_vectorized(n, n, v));
  for (const auto& v : skew_span.basis())
    skew_basis.emplace_back(Matrix::from_vectorized(n, n, v));
  if (sym_basis.size() + skew_basis.size() != basis.size())
    throw std::runtime_error("invariant_forms: sym/skew split dimension mismatch");
  return InvariantFormSpace(g, std::move(basis), std::move(sym_basis), std::move(skew_basis));
}

std::size_t metric_dimension(const LieAlgebra& g) { return invariant_forms(g).dim(); }

std::optional<BilinearForm> find_nondegenerate_symmetric(const InvariantFormSpace& space) {
  const auto& sym = space.sym_basis();
  if (sym.empty()) return std::nullopt;
  const std::size_t n = space.algebra().dim();
  const std::size_t d = sym.size();
  // A vector annihilated by every basis form lies in the radical of every
  // combination; that settles "none" without scanning the grid.
  {
    Matrix stacked(d * n, n);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) stacked(i * n + r, c) = sym[i].gram()(r, c);
    if (null_space(stacked).dim() > 0) return std::nullopt;
  }
  const unsigned long values = static_cast<unsigned long>(n) + 1;  // 0..n per coefficient
  std::vector<unsigned long> t(d, 0);
  for (;;) {
    // Advance the odometer (skipping the all-zero combination on entry).
    std::size_t pos = d;
    while (pos > 0) {
      --pos;
      if (++t[pos] < values) break;
      t[pos] = 0;
      if (pos == 0) return std::nullopt;  // grid exhausted: determinant vanishes identically
    }
    Matrix candidate(n, n);
    for (std::size_t i = 0; i < d; ++i)
      if (t[i] != 0) candidate = candidate + Rational(static_cast<long>(t[i])) * sym[i].gram();
    if (!det(candidate).is_zero()) return BilinearForm(std::move(candidate));
  }
}

Subspace orthogonal_complement(const BilinearForm& phi, const Subspace& s) {
  if (phi.dim() != s.ambient_dim())
    throw std::invalid_argument("orthogonal_complement: ambient mismatch");
  if (!phi.is_nondegenerate())
    throw std::invalid_argument("orthogonal_complement: form is degenerate");
  // phi(v, w) = 0 for each basis w: rows w^T G^T.
  return null_space(s.basis_matrix() * phi.gram().transpose());
}

DualModuleMap delta_map(const LieAlgebra& g, const BilinearForm& b) {
  if (b.dim() != g.dim()) throw std::invalid_argument("delta_map: dim mismatch");
  if (!check_invariance(g, b).empty())
    throw std::invalid_argument("delta_map: form is not invariant");
  DualModuleMap out;
  out.matrix = b.gram().transpose();
  out.bijective = !det(out.matrix).is_zero();
  out.module_map_ok = true;
  for (std::size_t i = 0; i < g.dim() && out.module_map_ok; ++i) {
    const Matrix neg_ad_t = -g.ad_basis(i).transpose();
    for (std::size_t j = 0; j < g.dim(); ++j) {
      const Vec lhs = out.matrix.mul_vec(g.c(i, j));
      const Vec rhs = neg_ad_t.mul_vec(out.matrix.col(j));
      if (lhs != rhs) {
        out.module_map_ok = false;
        break;
      }
    }
  }
  return out;
}

BilinearForm killing_form(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Matrix> ad(n);
  for (std::size_t i = 0; i < n; ++i) ad[i] = g.ad_basis(i);
  Matrix kappa(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational tr;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          const Rational& a = ad[i](r, c);
          if (!a.is_zero()) tr += a * ad[j](c, r);
        }
      kappa(i, j) = tr;
      kappa(j, i) = tr;
    }
  return BilinearForm(std::move(kappa));
}

bool is_semisimple(const LieAlgebra& g) {
  if (g.dim() == 0) return true;
  return killing_form(g).is_nondegenerate();
}

bool is_reductive(const LieAlgebra& g) {
  const Subspace z = center(g);
  const Subspace d = derived_subalgebra(g);
  if (z.dim() + d.dim() != g.dim()) return false;
  if (subspace_sum(z, d).dim() != g.dim()) return false;
  return is_semisimple(induced_subalgebra(g, d));
}

}  // namespace quadlie
