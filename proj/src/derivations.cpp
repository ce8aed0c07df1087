#include "quadlie/derivations.hpp"

#include <stdexcept>

namespace quadlie {

MatrixLieAlgebra MatrixLieAlgebra::from_span(std::size_t ambient_dim,
                                             const std::vector<Matrix>& generators) {
  std::vector<Vec> vectorized;
  for (const auto& m : generators) {
    if (m.rows() != ambient_dim || m.cols() != ambient_dim)
      throw std::invalid_argument("MatrixLieAlgebra: generator shape mismatch");
    vectorized.push_back(m.vectorize());
  }
  return from_subspace(ambient_dim, Subspace::span(ambient_dim * ambient_dim, vectorized));
}

MatrixLieAlgebra MatrixLieAlgebra::from_subspace(std::size_t ambient_dim, const Subspace& space) {
  if (space.ambient_dim() != ambient_dim * ambient_dim)
    throw std::invalid_argument("MatrixLieAlgebra: subspace must live in the n^2 matrix space");
  MatrixLieAlgebra out;
  out.ambient_ = ambient_dim;
  out.space_ = space;
  for (const auto& v : space.basis())
    out.basis_.push_back(Matrix::from_vectorized(ambient_dim, ambient_dim, v));
  const std::size_t k = out.basis_.size();
  out.certificate_.assign(k, std::vector<Vec>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      const Matrix comm = Matrix::commutator(out.basis_[a], out.basis_[b]);
      const auto coords = space.coordinates(comm.vectorize());
      if (!coords)
        throw std::invalid_argument("MatrixLieAlgebra: span is not closed under the commutator");
      out.certificate_[a][b] = *coords;
    }
  return out;
}

LieAlgebra MatrixLieAlgebra::to_abstract(const std::string& label_prefix) const {
  const std::size_t k = dim();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back(label_prefix + std::to_string(i + 1));
  LieAlgebra abstract(std::move(labels), certificate_);
  if (!check_jacobi(abstract).empty())
    throw std::runtime_error("MatrixLieAlgebra: certificate violates Jacobi");
  return abstract;
}

namespace {

// Unknowns: vec(D) row-major. For each pair i < j and coordinate k:
//   sum_p c(i,j)_p D[k][p] - sum_p c(p,j)_k D[p][i] - sum_q c(i,q)_k D[q][j] = 0.
void append_derivation_equations(const LieAlgebra& g, RowSpaceBuilder& rows) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec& cij = g.c(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vec eq(n * n);
        bool nonzero = false;
        for (std::size_t p = 0; p < n; ++p) {
          if (!cij[p].is_zero()) {
            eq[k * n + p] += cij[p];
            nonzero = true;
          }
          const Rational& left = g.c(p, j)[k];
          if (!left.is_zero()) {
            eq[p * n + i] -= left;
            nonzero = true;
          }
          const Rational& right = g.c(i, p)[k];
          if (!right.is_zero()) {
            eq[p * n + j] -= right;
            nonzero = true;
          }
        }
        if (nonzero) rows.insert(std::move(eq));
      }
    }
}

}  // namespace

MatrixLieAlgebra derivations(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  RowSpaceBuilder rows(n * n);
  append_derivation_equations(g, rows);
  return MatrixLieAlgebra::from_subspace(n, rows.kernel());
}

MatrixLieAlgebra inner_derivations(const LieAlgebra& g) {
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < g.dim(); ++i) gens.push_back(g.ad_basis(i));
  return MatrixLieAlgebra::from_span(g.dim(), gens);
}

MatrixLieAlgebra skew_derivations(const LieAlgebra& g, const BilinearForm& phi) {
  if (!phi.is_symmetric() || !phi.is_nondegenerate() || !check_invariance(g, phi).empty())
    throw std::invalid_argument(
        "skew_derivations: form must be symmetric, invariant and nondegenerate");
  const std::size_t n = g.dim();
  RowSpaceBuilder rows(n * n);
  append_derivation_equations(g, rows);
  // Skewness: D^T G + G D = 0 entry-wise, i.e. for all (i, j):
  //   sum_p D[p][i] G[p][j] + sum_q G[i][q] D[q][j] = 0.
  const Matrix& gram = phi.gram();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {  // D^T G + G D is symmetric here
      Vec eq(n * n);
      bool nonzero = false;
      for (std::size_t p = 0; p < n; ++p) {
        if (!gram(p, j).is_zero()) {
          eq[p * n + i] += gram(p, j);
          nonzero = true;
        }
        if (!gram(i, p).is_zero()) {
          eq[p * n + j] += gram(i, p);
          nonzero = true;
        }
      }
      if (nonzero) rows.insert(std::move(eq));
    }
  return MatrixLieAlgebra::from_subspace(n, rows.kernel());
}

DerivationProfile derivation_profile(const LieAlgebra& g,
                                     const std::optional<BilinearForm>& phi) {
  DerivationProfile out{derivations(g), inner_derivations(g), std::nullopt};
  if (phi) out.skew = skew_derivations(g, *phi);
  return out;
}

BilinearForm killing_form(const MatrixLieAlgebra& m) { return killing_form(m.to_abstract()); }

bool is_semisimple(const MatrixLieAlgebra& m) { return is_semisimple(m.to_abstract()); }

bool is_abelian(const MatrixLieAlgebra& m) {
  for (std::size_t a = 0; a < m.dim(); ++a)
    for (std::size_t b = a + 1; b < m.dim(); ++b)
      if (!vec_is_zero(m.certificate(a, b))) return false;
  return true;
}

bool is_reductive(const MatrixLieAlgebra& m) { return is_reductive(m.to_abstract()); }

}  // namespace quadlie
