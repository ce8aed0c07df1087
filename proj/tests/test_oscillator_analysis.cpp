#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "quadlie/oscillator_analysis.hpp"

using namespace quadlie;

TEST_CASE("heisenberg derivation template equals the solver space") {
  for (std::size_t m : {1ul, 2ul, 3ul}) {
    CHECK(heisenberg_derivation_shape_check(m));
    CHECK(heisenberg_derivation_template(m).dim() == 2 * m * m + 3 * m + 1);
  }
}

TEST_CASE("oscillator derivation templates and dimensions (Theorem 2)") {
  for (std::size_t m : {1ul, 2ul, 3ul}) {
    const auto shape = oscillator_derivation_shape_check(m);
    CHECK(shape.der_dim == m * m + 2 * m + 2);
    CHECK(shape.skew_dim == m * m + 2 * m);
    CHECK(shape.der_matches_template);
    CHECK(shape.skew_matches_template);

    // Template decomposition: skew = s + t, der = skew + scaling + beta.
    const Subspace s = oscillator_s_template(m);
    const Subspace t = oscillator_t_template(m);
    CHECK(s.dim() == m * m);
    CHECK(t.dim() == 2 * m);
    CHECK(subspace_sum(s, t) == oscillator_skew_derivation_template(m));
    CHECK(subspace_intersection(s, t).dim() == 0);
    CHECK(oscillator_derivation_template(m).contains(oscillator_skew_derivation_template(m)));
  }
}

TEST_CASE("inner derivations live inside the skew template") {
  for (std::size_t m : {1ul, 2ul}) {
    const MetricLieAlgebra d = oscillator(OscillatorSpec(std::vector<Rational>(m, 1)));
    const Subspace skew_template = oscillator_skew_derivation_template(m);
    for (std::size_t i = 0; i < d.algebra.dim(); ++i)
      CHECK(skew_template.contains(d.algebra.ad_basis(i).vectorize()));
  }
}

TEST_CASE("derivation characterization on named maps") {
  const OscillatorSpec spec({Rational(1)});
  const MetricLieAlgebra d4 = oscillator(spec);

  CHECK(verify_oscillator_derivation_characterization(spec, d4.algebra,
                                                      d4.algebra.ad_basis(0)));

  Matrix grading(4, 4);  // v -> v on V, z -> 2z
  grading(1, 1) = 1;
  grading(2, 2) = 1;
  grading(3, 3) = 2;
  CHECK(verify_oscillator_derivation_characterization(spec, d4.algebra, grading));

  Matrix unit01(4, 4);
  unit01(0, 1) = 1;
  CHECK_FALSE(verify_oscillator_derivation_characterization(spec, d4.algebra, unit01));

  Matrix star_breaker(4, 4);  // delta* -> x violates condition (b)
  star_breaker(1, 3) = 1;
  CHECK_FALSE(verify_oscillator_derivation_characterization(spec, d4.algebra, star_breaker));
}

TEST_CASE("characterization is equivalent to solver membership") {
  std::mt19937 eng(61);
  std::uniform_int_distribution<long> entry(-3, 3);
  for (const auto& lambda : std::vector<std::vector<Rational>>{{1}, {1, 2}}) {
    const OscillatorSpec spec(lambda);
    const MetricLieAlgebra d = oscillator(spec);
    const MatrixLieAlgebra der = derivations(d.algebra);
    const std::size_t n = d.algebra.dim();
    for (int trial = 0; trial < 40; ++trial) {
      Matrix candidate(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) candidate(i, j) = entry(eng);
      CHECK(der.contains(candidate) ==
            verify_oscillator_derivation_characterization(spec, d.algebra, candidate));
    }
    for (int trial = 0; trial < 10; ++trial) {
      Matrix member(n, n);
      for (const auto& b : der.basis()) member = member + Rational(entry(eng)) * b;
      CHECK(verify_oscillator_derivation_characterization(spec, d.algebra, member));
    }
  }
}

TEST_CASE("class prediction from the multiplicity pattern") {
  CHECK(predict_oscillator_class(OscillatorSpec({Rational(1)})) == OscillatorClass::OII);
  CHECK(predict_oscillator_class(OscillatorSpec({1, 2})) == OscillatorClass::OI);
  CHECK(predict_oscillator_class(OscillatorSpec({1, 1})) == OscillatorClass::OII);
  CHECK(predict_oscillator_class(OscillatorSpec({1, 1, 2})) == OscillatorClass::OIII);
  CHECK(predict_oscillator_class(OscillatorSpec({1, 2, 3})) == OscillatorClass::OI);
}

TEST_CASE("oscillator class observables") {
  const auto oi = oscillator_class_check({Rational(1), Rational(2)});
  CHECK(oi.predicted == OscillatorClass::OI);
  CHECK(oi.skew_dim == 6);
  CHECK(oi.outer_abelian);
  CHECK(oi.matches_prediction);

  const auto oii = oscillator_class_check({Rational(1), Rational(1)});
  CHECK(oii.predicted == OscillatorClass::OII);
  CHECK(oii.skew_dim == 8);
  CHECK(oii.outer_dim == 3);
  CHECK(oii.outer_semisimple);
  CHECK(oii.semisimple_subalgebra_dim == 3);
  CHECK(oii.matches_prediction);

  const auto oiii = oscillator_class_check({Rational(1), Rational(1), Rational(2)});
  CHECK(oiii.predicted == OscillatorClass::OIII);
  CHECK_FALSE(oiii.outer_abelian);
  CHECK(oiii.outer_reductive);
  CHECK(oiii.matches_prediction);

  // Uniform but non-unit frequencies still land in O-II with the su factor.
  const auto rescaled = oscillator_class_check({Rational(2), Rational(2)});
  CHECK(rescaled.predicted == OscillatorClass::OII);
  CHECK(rescaled.semisimple_subalgebra_dim == 3);
  CHECK(rescaled.matches_prediction);

  // O-I with three distinct frequencies has a 2-dim abelian outer algebra.
  const auto oi3 = oscillator_class_check({Rational(1), Rational(2), Rational(3)});
  CHECK(oi3.predicted == OscillatorClass::OI);
  CHECK(oi3.outer_dim == 2);
  CHECK(oi3.outer_abelian);
  CHECK(oi3.matches_prediction);

  // m = 1: skew derivations are exactly the inner ones, outer dim 0.
  const auto d4_class = oscillator_class_check({Rational(1)});
  CHECK(d4_class.predicted == OscillatorClass::OII);
  CHECK(d4_class.skew_dim == 3);
  CHECK(d4_class.outer_dim == 0);
  CHECK(d4_class.matches_prediction);
}

TEST_CASE("theorem 2 isomorphism onto the su model") {
  for (std::size_t m : {2ul, 3ul}) {
    const auto iso = theorem2_isomorphism_check(m);
    CHECK(iso.s2_inside_skew);
    CHECK(iso.s2_closed);
    CHECK(iso.map_bijective);
    CHECK(iso.brackets_match);
    CHECK(iso.killing_nondegenerate);
    CHECK(iso.s2_dim == m * m - 1);
    CHECK(iso.su_dim == m * m - 1);
    CHECK(iso.ok());
  }
  CHECK_THROWS_AS(theorem2_isomorphism_check(1), std::invalid_argument);
}

TEST_CASE("s2 generators are skew derivations for uniform lambda") {
  for (std::size_t m : {2ul, 3ul}) {
    const MetricLieAlgebra d =
        oscillator(OscillatorSpec(std::vector<Rational>(m, Rational(3, 2))));
    const MatrixLieAlgebra skew = skew_derivations(d.algebra, d.form);
    for (const auto& g : oscillator_s2_generators(m)) CHECK(skew.contains(g));
  }
}

TEST_CASE("the derived subalgebra of the skew derivations contains the su factor") {
  for (std::size_t m : {2ul, 3ul}) {
    const MetricLieAlgebra d = oscillator(OscillatorSpec(std::vector<Rational>(m, 1)));
    const MatrixLieAlgebra skew = skew_derivations(d.algebra, d.form);
    const Subspace derived = derived_subalgebra(skew.to_abstract());
    for (const auto& g : oscillator_s2_generators(m)) {
      const auto coords = skew.space().coordinates(g.vectorize());
      REQUIRE(coords.has_value());
      CHECK(derived.contains(*coords));
    }
  }
}
