#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quadlie/constructions.hpp"
#include "quadlie/derivations.hpp"

using namespace quadlie;

namespace {

MetricLieAlgebra d_metric(std::vector<Rational> lambda) {
  return oscillator(OscillatorSpec(std::move(lambda)));
}

bool certificate_reconstructs(const MatrixLieAlgebra& m) {
  for (std::size_t a = 0; a < m.dim(); ++a)
    for (std::size_t b = 0; b < m.dim(); ++b) {
      Matrix expected(m.ambient_dim(), m.ambient_dim());
      for (std::size_t k = 0; k < m.dim(); ++k)
        expected = expected + m.certificate(a, b)[k] * m.basis()[k];
      if (!(Matrix::commutator(m.basis()[a], m.basis()[b]) == expected)) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("matrix lie algebra span closure") {
  // E12, E21 do not span a subalgebra of gl_2; adding the commutator does.
  Matrix e12(2, 2), e21(2, 2);
  e12(0, 1) = 1;
  e21(1, 0) = 1;
  CHECK_THROWS_AS(MatrixLieAlgebra::from_span(2, {e12, e21}), std::invalid_argument);
  Matrix h = Matrix::commutator(e12, e21);
  const MatrixLieAlgebra sl2 = MatrixLieAlgebra::from_span(2, {e12, e21, h});
  CHECK(sl2.dim() == 3);
  CHECK(certificate_reconstructs(sl2));
  CHECK(check_jacobi(sl2.to_abstract()).empty());
  CHECK(is_semisimple(sl2));
}

TEST_CASE("derivations of abelian algebras fill gl_n") {
  for (std::size_t n : {2ul, 3ul}) {
    const MatrixLieAlgebra der = derivations(LieAlgebra::abelian(n));
    CHECK(der.dim() == n * n);
    CHECK(certificate_reconstructs(der));
  }
}

TEST_CASE("derivation dimensions: h3 and d4") {
  const MatrixLieAlgebra der_h3 = derivations(heisenberg(1));
  CHECK(der_h3.dim() == 6);  // block count at m=1: M(1)+alpha(1)+P(1)+Q(1)+c(2)
  CHECK(certificate_reconstructs(der_h3));

  const MatrixLieAlgebra der_d4 = derivations(d_metric({1}).algebra);
  CHECK(der_d4.dim() == 5);

  // Every solver output is an actual derivation.
  const LieAlgebra d4 = d_metric({1}).algebra;
  for (const auto& d : der_d4.basis())
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) {
        Vec rhs = d4.bracket(d.col(i), d4.basis_vector(j));
        vec_axpy(rhs, Rational(1), d4.bracket(d4.basis_vector(i), d.col(j)));
        CHECK(d.mul_vec(d4.c(i, j)) == rhs);
      }
}

TEST_CASE("inner derivations") {
  CHECK(inner_derivations(LieAlgebra::abelian(3)).dim() == 0);

  for (const auto& g : {heisenberg(1), d_metric({1}).algebra, d_metric({1, 2}).algebra}) {
    const MatrixLieAlgebra inner = inner_derivations(g);
    CHECK(inner.dim() == g.dim() - center(g).dim());
    CHECK(derivations(g).contains(inner));
  }
  CHECK(inner_derivations(d_metric({1}).algebra).dim() == 3);
}

TEST_CASE("derived subalgebra of inner d_{2m+2} is span{ad x_i, ad y_i}, abelian") {
  for (std::size_t m : {1ul, 2ul}) {
    const MetricLieAlgebra d = d_metric(std::vector<Rational>(m, Rational(1)));
    const MatrixLieAlgebra inner = inner_derivations(d.algebra);
    const LieAlgebra inner_abstract = inner.to_abstract();
    const Subspace derived = derived_subalgebra(inner_abstract);
    CHECK(derived.dim() == 2 * m);
    CHECK(induced_subalgebra(inner_abstract, derived).is_abelian());
    // The derived part is spanned by the ad's of the e_i basis vectors.
    for (std::size_t i = 1; i <= 2 * m; ++i) {
      const auto coords = inner.space().coordinates(d.algebra.ad_basis(i).vectorize());
      REQUIRE(coords.has_value());
      CHECK(derived.contains(*coords));
    }
  }
}

TEST_CASE("skew derivations of the euclidean plane: the rotation line") {
  const LieAlgebra v2 = LieAlgebra::abelian(2);
  const MatrixLieAlgebra skew = skew_derivations(v2, BilinearForm(Matrix::identity(2)));
  CHECK(skew.dim() == 1);
  Matrix rotation(2, 2);
  rotation(0, 1) = -1;
  rotation(1, 0) = 1;
  CHECK(skew.contains(rotation));
}

TEST_CASE("skew derivations of oscillator algebras") {
  const MetricLieAlgebra d4 = d_metric({1});
  const MatrixLieAlgebra skew4 = skew_derivations(d4.algebra, d4.form);
  CHECK(skew4.dim() == 3);
  CHECK(skew4.space() == inner_derivations(d4.algebra).space());

  const MetricLieAlgebra d6 = d_metric({1, 1});
  CHECK(skew_derivations(d6.algebra, d6.form).dim() == 8);

  // skew(d4, phi01) = inner d4 is nonabelian and not reductive.
  const MatrixLieAlgebra inner4 = inner_derivations(d4.algebra);
  CHECK_FALSE(is_abelian(inner4));
  CHECK_FALSE(is_reductive(inner4));
  CHECK_FALSE(is_semisimple(inner4));

  CHECK_THROWS_AS(skew_derivations(d4.algebra, BilinearForm(Matrix::identity(4))),
                  std::invalid_argument);
  CHECK_THROWS_AS(skew_derivations(d4.algebra, BilinearForm(Matrix(4, 4))),
                  std::invalid_argument);
}

TEST_CASE("skew derivations are derivations and phi-skew") {
  const MetricLieAlgebra d6 = d_metric({1, 2});
  const MatrixLieAlgebra skew = skew_derivations(d6.algebra, d6.form);
  CHECK(derivations(d6.algebra).contains(skew));
  for (const auto& d : skew.basis())
    CHECK((d.transpose() * d6.form.gram() + d6.form.gram() * d).is_zero());
}

TEST_CASE("derivation profile ties the dimensions together") {
  const MetricLieAlgebra d6 = d_metric({1, 1});
  const DerivationProfile profile = derivation_profile(d6.algebra, d6.form);
  CHECK(profile.der.dim() == 10);
  CHECK(profile.inner.dim() == 5);
  REQUIRE(profile.skew.has_value());
  CHECK(profile.skew->dim() == 8);
  CHECK(profile.der.contains(profile.inner));
  CHECK(profile.der.contains(*profile.skew));
  CHECK(profile.skew->contains(profile.inner));
}

TEST_CASE("killing form of a matrix algebra via its abstract structure") {
  const MatrixLieAlgebra su2 = su_model(2);
  CHECK(is_semisimple(su2));
  CHECK(killing_form(su2).is_nondegenerate());
  CHECK_FALSE(is_abelian(su2));
}
