#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quadlie/constructions.hpp"
#include "quadlie/lie_algebra.hpp"

using namespace quadlie;

namespace {

LieAlgebra d_algebra(std::vector<Rational> lambda) {
  return oscillator(OscillatorSpec(std::move(lambda))).algebra;
}

Subspace axis(std::size_t ambient, std::initializer_list<std::size_t> indices) {
  std::vector<Vec> basis;
  for (auto i : indices) {
    Vec v(ambient);
    v[i] = 1;
    basis.push_back(std::move(v));
  }
  return Subspace::span(ambient, basis);
}

}  // namespace

TEST_CASE("antisymmetry is enforced at construction") {
  std::vector<std::vector<Vec>> c(2, std::vector<Vec>(2, Vec(2)));
  c[0][1] = Vec{Rational(1), Rational(0)};
  c[1][0] = Vec{Rational(1), Rational(0)};  // should be the negative
  CHECK_THROWS_AS(LieAlgebra({"a", "b"}, c), std::invalid_argument);
  c[1][0] = Vec{Rational(-1), Rational(0)};
  CHECK_NOTHROW(LieAlgebra({"a", "b"}, c));
}

TEST_CASE("check_jacobi on the stated examples") {
  CHECK(check_jacobi(LieAlgebra::abelian(4)).empty());
  CHECK(check_jacobi(heisenberg(1)).empty());

  // h3 with the extra bracket [u1, z] = u1 breaks Jacobi at (u1, u2, z).
  Vec z3(3), u1(3);
  z3[2] = 1;
  u1[0] = 1;
  const LieAlgebra mutated =
      LieAlgebra::from_brackets({"u1", "u2", "z"}, {{0, 1, z3}, {0, 2, u1}});
  const auto bad = check_jacobi(mutated);
  REQUIRE_FALSE(bad.empty());
  CHECK(bad.front() == std::array<std::size_t, 3>{0, 1, 2});
}

TEST_CASE("bracket_subspaces") {
  const LieAlgebra abelian = LieAlgebra::abelian(3);
  CHECK(bracket_subspaces(abelian, Subspace::full(3), Subspace::full(3)).dim() == 0);

  const LieAlgebra h3 = heisenberg(1);
  CHECK(derived_subalgebra(h3) == axis(3, {2}));

  const LieAlgebra d4 = d_algebra({1});
  CHECK(derived_subalgebra(d4) == axis(4, {1, 2, 3}));

  CHECK_THROWS_AS(bracket_subspaces(h3, Subspace::full(4), Subspace::full(3)),
                  std::invalid_argument);
}

TEST_CASE("derived and lower central series") {
  const LieAlgebra abelian = LieAlgebra::abelian(3);
  const auto abelian_derived = derived_series(abelian);
  REQUIRE(abelian_derived.size() == 2);
  CHECK(abelian_derived[0].dim() == 3);
  CHECK(abelian_derived[1].dim() == 0);

  const LieAlgebra d4 = d_algebra({1});
  std::vector<std::size_t> derived_dims;
  for (const auto& s : derived_series(d4)) derived_dims.push_back(s.dim());
  CHECK(derived_dims == std::vector<std::size_t>{4, 3, 1, 0});

  std::vector<std::size_t> lower_dims;
  for (const auto& s : lower_central_series(d4)) lower_dims.push_back(s.dim());
  CHECK(lower_dims == std::vector<std::size_t>{4, 3});  // stabilizes at g^2
}

TEST_CASE("series terms are decreasing ideals") {
  for (const auto& g : {heisenberg(2), d_algebra({1, 2}), d_algebra({1, 1})}) {
    const auto derived = derived_series(g);
    for (std::size_t k = 0; k + 1 < derived.size(); ++k) {
      CHECK(derived[k].contains(derived[k + 1]));
      CHECK(is_ideal(g, derived[k + 1]).is_ideal);
    }
    const auto lower = lower_central_series(g);
    for (std::size_t k = 0; k + 1 < lower.size(); ++k) {
      CHECK(lower[k].contains(lower[k + 1]));
      CHECK(is_ideal(g, lower[k + 1]).is_ideal);
    }
  }
}

TEST_CASE("center") {
  CHECK(center(LieAlgebra::abelian(3)) == Subspace::full(3));
  CHECK(center(heisenberg(1)) == axis(3, {2}));
  CHECK(center(heisenberg(3)) == axis(7, {6}));
  CHECK(center(d_algebra({1, 1})) == axis(6, {5}));

  // The center is an ideal and brackets to zero.
  const LieAlgebra d6 = d_algebra({1, 2});
  const Subspace z = center(d6);
  CHECK(is_ideal(d6, z).is_ideal);
  CHECK(bracket_subspaces(d6, Subspace::full(6), z).dim() == 0);
}

TEST_CASE("upper central series: heisenberg and oscillator") {
  std::vector<std::size_t> h3_dims;
  for (const auto& s : upper_central_series(heisenberg(1))) h3_dims.push_back(s.dim());
  CHECK(h3_dims == std::vector<std::size_t>{0, 1, 3});

  std::vector<std::size_t> d4_dims;
  for (const auto& s : upper_central_series(d_algebra({1}))) d4_dims.push_back(s.dim());
  CHECK(d4_dims == std::vector<std::size_t>{0, 1});  // stabilizes at the center
}

TEST_CASE("solvability and nilpotency") {
  const LieAlgebra d4 = d_algebra({1});
  CHECK(is_solvable(d4));
  CHECK_FALSE(is_nilpotent(d4));

  const LieAlgebra h3 = heisenberg(1);
  CHECK(is_solvable(h3));
  CHECK(is_nilpotent(h3));

  const LieAlgebra su2 = su_model(2).to_abstract("u");
  CHECK_FALSE(is_solvable(su2));
  CHECK_FALSE(is_nilpotent(su2));
}

TEST_CASE("ideal reports with witnesses") {
  const LieAlgebra d4 = d_algebra({1});
  CHECK(is_ideal(d4, axis(4, {3})).is_ideal);
  CHECK(is_ideal(d4, axis(4, {1, 2, 3})).is_ideal);

  const IdealReport report = is_ideal(d4, axis(4, {0}));
  CHECK_FALSE(report.is_ideal);
  REQUIRE_FALSE(report.witnesses.empty());
  for (const auto& [i, v] : report.witnesses)
    CHECK_FALSE(report.subspace.contains(d4.bracket(d4.basis_vector(i), v)));
}

TEST_CASE("structure summary: derived dim, center dim, locality") {
  const auto d4 = structure_summary(d_algebra({1}));
  CHECK(d4.derived_dim == 3);
  CHECK(d4.center_dim == 1);
  CHECK(d4.local);

  const auto flat = structure_summary(LieAlgebra::abelian(2));
  CHECK(flat.derived_dim == 0);
  CHECK(flat.center_dim == 2);
  CHECK_FALSE(flat.local);

  const auto d6 = structure_summary(d_algebra({1, 1}));
  CHECK(d6.derived_dim == 5);
  CHECK(d6.center_dim == 1);
  CHECK(d6.local);
}

TEST_CASE("prop 4 dimension pattern over a lambda grid") {
  const std::vector<std::vector<Rational>> grid{
      {1}, {2}, {1, 2}, {1, 1}, {Rational(1, 2), Rational(3, 2)}, {1, 1, 2}, {1, 2, 3},
      {1, 1, 1, 1}, {1, 1, 2, 3}};
  for (const auto& lambda : grid) {
    const std::size_t m = lambda.size();
    const LieAlgebra g = d_algebra(lambda);
    CHECK(derived_subalgebra(g).dim() == 2 * m + 1);
    CHECK(center(g).dim() == 1);
    CHECK(is_solvable(g));
    CHECK_FALSE(is_nilpotent(g));
    CHECK(structure_summary(g).local);
  }
}

TEST_CASE("induced subalgebra and quotient") {
  const LieAlgebra h3 = heisenberg(1);
  CHECK_THROWS_AS(induced_subalgebra(h3, axis(3, {0, 1})), std::invalid_argument);

  const LieAlgebra d4 = d_algebra({1});
  const LieAlgebra nil = induced_subalgebra(d4, derived_subalgebra(d4), "n");
  CHECK(nil.dim() == 3);
  CHECK(is_heisenberg_type(nil));

  const LieAlgebra top = quotient_algebra(d4, derived_subalgebra(d4));
  CHECK(top.dim() == 1);
  CHECK(top.is_abelian());

  const LieAlgebra h_mod_z = quotient_algebra(h3, center(h3));
  CHECK(h_mod_z.dim() == 2);
  CHECK(h_mod_z.is_abelian());

  CHECK_THROWS_AS(quotient_algebra(d4, axis(4, {0})), std::invalid_argument);
}

TEST_CASE("is_lie_isomorphism") {
  const LieAlgebra h3 = heisenberg(1);
  CHECK(is_lie_isomorphism(Matrix::identity(3), h3, h3));
  // Scaling z alone is not an automorphism of h3; scaling u1 and z together is.
  Matrix bad = Matrix::identity(3);
  bad(2, 2) = 2;
  CHECK_FALSE(is_lie_isomorphism(bad, h3, h3));
  Matrix good = Matrix::identity(3);
  good(0, 0) = 2;
  good(2, 2) = 2;
  CHECK(is_lie_isomorphism(good, h3, h3));
  CHECK_FALSE(is_lie_isomorphism(Matrix(3, 3), h3, h3));  // singular
}
