#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "quadlie/constructions.hpp"
#include "quadlie/forms.hpp"

using namespace quadlie;

namespace {

MetricLieAlgebra d_metric(std::vector<Rational> lambda) {
  return oscillator(OscillatorSpec(std::move(lambda)));
}

/// Independent oracle: assemble the full invariance system as one dense
/// n^3 x n^2 matrix, entry by entry from the definition, and solve it.
Subspace invariance_solutions_oracle(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Matrix system(n * n * n, n * n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k, ++row)
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = 0; q < n; ++q) {
            // phi([e_i,e_j], e_k): coefficient of B[p][q] is c(i,j)_p [q==k].
            if (q == k) system(row, p * n + q) += g.c(i, j)[p];
            // phi(e_j, [e_i,e_k]): coefficient of B[p][q] is [p==j] c(i,k)_q.
            if (p == j) system(row, p * n + q) += g.c(i, k)[q];
          }
  return null_space(system);
}

}  // namespace

TEST_CASE("check_invariance on the stated examples") {
  const LieAlgebra abelian = LieAlgebra::abelian(3);
  std::mt19937 eng(3);
  std::uniform_int_distribution<long> entry(-3, 3);
  Matrix any(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) any(i, j) = entry(eng);
  CHECK(check_invariance(abelian, BilinearForm(any)).empty());

  const MetricLieAlgebra d4 = d_metric({1});
  CHECK(check_invariance(d4.algebra, d4.form).empty());
  CHECK_FALSE(check_invariance(d4.algebra, BilinearForm(Matrix::identity(4))).empty());
}

TEST_CASE("invariant forms of an abelian algebra fill the whole form space") {
  for (std::size_t n : {2ul, 3ul}) {
    const InvariantFormSpace space = invariant_forms(LieAlgebra::abelian(n));
    CHECK(space.dim() == n * n);
    CHECK(space.sym_dim() == n * (n + 1) / 2);
    CHECK(space.skew_dim() == n * (n - 1) / 2);
  }
}

TEST_CASE("invariant forms of h3 match the brute-force oracle") {
  const LieAlgebra h3 = heisenberg(1);
  const Subspace oracle = invariance_solutions_oracle(h3);
  CHECK(oracle.dim() == 4);  // free 2x2 block on u1, u2; z in the radical

  const InvariantFormSpace space = invariant_forms(h3);
  CHECK(space.dim() == 4);
  std::vector<Vec> vectorized;
  for (const auto& b : space.basis()) vectorized.push_back(b.gram().vectorize());
  CHECK(Subspace::span(9, vectorized) == oracle);

  // z is orthogonal to everything in every invariant form.
  for (const auto& b : space.basis())
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(b.gram()(2, i).is_zero());
      CHECK(b.gram()(i, 2).is_zero());
    }
}

TEST_CASE("invariant forms of oscillator algebras match the oracle too") {
  const MetricLieAlgebra d4 = d_metric({1});
  const InvariantFormSpace space = invariant_forms(d4.algebra);
  CHECK(space.dim() == 2);
  CHECK(space.sym_dim() == 2);
  CHECK(space.skew_dim() == 0);
  std::vector<Vec> vectorized;
  for (const auto& b : space.basis()) vectorized.push_back(b.gram().vectorize());
  CHECK(Subspace::span(16, vectorized) == invariance_solutions_oracle(d4.algebra));
  // phi_{0,1} itself lies in the computed space.
  CHECK(invariance_solutions_oracle(d4.algebra).contains(d4.form.gram().vectorize()));
}

TEST_CASE("metric dimension") {
  CHECK(metric_dimension(d_metric({1}).algebra) == 2);
  CHECK(metric_dimension(LieAlgebra::abelian(3)) == 9);
  CHECK(metric_dimension(su_model(2).to_abstract("u")) == 1);
}

TEST_CASE("sym/skew split preserves invariance") {
  for (const auto& g :
       {heisenberg(1), d_metric({1}).algebra, su_model(2).to_abstract("u")}) {
    const InvariantFormSpace space = invariant_forms(g);
    for (const auto& b : space.basis()) {
      const BilinearForm sym = b.symmetric_part();
      const BilinearForm skew = b.skew_part();
      CHECK(check_invariance(g, sym).empty());
      CHECK(check_invariance(g, skew).empty());
      CHECK(sym.gram() + skew.gram() == b.gram());
    }
  }
}

TEST_CASE("find_nondegenerate_symmetric") {
  const MetricLieAlgebra d4 = d_metric({1});
  const auto found = find_nondegenerate_symmetric(invariant_forms(d4.algebra));
  REQUIRE(found.has_value());
  CHECK(found->is_symmetric());
  CHECK(found->is_nondegenerate());
  CHECK(check_invariance(d4.algebra, *found).empty());
  // The representative pairs delta with delta*: the s parameter is nonzero.
  CHECK_FALSE(found->gram()(0, 3).is_zero());

  CHECK_FALSE(find_nondegenerate_symmetric(invariant_forms(heisenberg(1))).has_value());

  const auto abelian = find_nondegenerate_symmetric(invariant_forms(LieAlgebra::abelian(2)));
  REQUIRE(abelian.has_value());
  CHECK(abelian->is_nondegenerate());
}

TEST_CASE("orthogonal complements") {
  const MetricLieAlgebra d4 = d_metric({1});
  const Subspace g2 = derived_subalgebra(d4.algebra);
  CHECK(orthogonal_complement(d4.form, g2) == center(d4.algebra));
  CHECK(orthogonal_complement(d4.form, Subspace::full(4)).dim() == 0);

  const MetricLieAlgebra d6 = d_metric({1, 1});
  CHECK(orthogonal_complement(d6.form, center(d6.algebra)) == derived_subalgebra(d6.algebra));

  // dim U + dim U^perp = n for random subspaces of d6.
  std::mt19937 eng(5);
  std::uniform_int_distribution<long> entry(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vec> vecs;
    for (int v = 0; v < 2 + trial % 3; ++v) {
      Vec w(6);
      for (auto& x : w) x = entry(eng);
      vecs.push_back(std::move(w));
    }
    const Subspace s = Subspace::span(6, vecs);
    CHECK(orthogonal_complement(d6.form, s).dim() + s.dim() == 6);
  }

  const BilinearForm degenerate{Matrix(4, 4)};
  CHECK_THROWS_AS(orthogonal_complement(degenerate, g2), std::invalid_argument);
}

TEST_CASE("delta map: bijectivity tracks nondegeneracy, module law verified") {
  const MetricLieAlgebra d4 = d_metric({1});
  const DualModuleMap dual = delta_map(d4.algebra, d4.form);
  CHECK(dual.bijective);
  CHECK(dual.module_map_ok);
  CHECK(dual.matrix == d4.form.gram().transpose());

  // Round trip: the reconstructed form equals the input entry-wise.
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(dual.matrix(j, i) == d4.form.gram()(i, j));

  // Every invariant form on h3 is degenerate, so never bijective.
  const LieAlgebra h3 = heisenberg(1);
  const InvariantFormSpace h3_space = invariant_forms(h3);
  for (const auto& b : h3_space.basis()) {
    const DualModuleMap h_dual = delta_map(h3, b);
    CHECK(h_dual.module_map_ok);
    CHECK_FALSE(h_dual.bijective);
  }

  CHECK_THROWS_AS(delta_map(d4.algebra, BilinearForm(Matrix::identity(4))),
                  std::invalid_argument);
}

TEST_CASE("killing form is always invariant; Cartan semisimplicity") {
  for (const auto& g : {heisenberg(1), d_metric({1}).algebra, d_metric({1, 2}).algebra,
                        su_model(2).to_abstract("u"), LieAlgebra::abelian(3)}) {
    const BilinearForm kappa = killing_form(g);
    CHECK(kappa.is_symmetric());
    CHECK(check_invariance(g, kappa).empty());
  }
  CHECK(killing_form(LieAlgebra::abelian(3)).gram().is_zero());
  CHECK(is_semisimple(su_model(2).to_abstract("u")));
  CHECK(is_semisimple(so_model(3).to_abstract("o")));
  CHECK_FALSE(is_semisimple(d_metric({1}).algebra));
  CHECK_FALSE(is_semisimple(heisenberg(1)));
  CHECK_FALSE(is_semisimple(LieAlgebra::abelian(2)));
}

TEST_CASE("reductive predicate") {
  CHECK(is_reductive(LieAlgebra::abelian(3)));
  CHECK(is_reductive(su_model(2).to_abstract("u")));
  CHECK_FALSE(is_reductive(d_metric({1}).algebra));
  CHECK_FALSE(is_reductive(heisenberg(1)));
}

TEST_CASE("lemma 1 gram template for every symmetric invariant form") {
  for (const auto& lambda : std::vector<std::vector<Rational>>{{1}, {1, 2}, {1, 1}}) {
    const MetricLieAlgebra d = d_metric(lambda);
    const std::size_t n = d.algebra.dim();
    const InvariantFormSpace space = invariant_forms(d.algebra);
    for (const auto& b : space.sym_basis()) {
      const Matrix& gram = b.gram();
      const Rational s = gram(0, n - 1);
      CHECK(gram(n - 1, 0) == s);
      CHECK(gram(n - 1, n - 1).is_zero());
      for (std::size_t i = 1; i + 1 < n; ++i) CHECK(gram(i, i) == s);
      for (std::size_t i = 1; i + 1 < n; ++i) {
        CHECK(gram(0, i).is_zero());
        CHECK(gram(i, n - 1).is_zero());
        for (std::size_t j = 1; j + 1 < n; ++j)
          if (i != j) CHECK(gram(i, j).is_zero());
      }
    }
  }
}
