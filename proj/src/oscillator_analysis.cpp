#include "quadlie/oscillator_analysis.hpp"

#include <stdexcept>

namespace quadlie {

Subspace heisenberg_derivation_template(std::size_t m) {
  const std::size_t n = 2 * m + 1;
  std::vector<Vec> gens;
  auto push = [&](const Matrix& x) { gens.push_back(x.vectorize()); };

  for (std::size_t a = 0; a < m; ++a)  // M block: E_ab on u's, -E_ba on the dual half
    for (std::size_t b = 0; b < m; ++b) {
      Matrix x(n, n);
      x(a, b) = 1;
      x(m + b, m + a) = -1;
      push(x);
    }
  {
    Matrix x(n, n);  // scaling direction: identity on V, 2 on z
    for (std::size_t i = 0; i < 2 * m; ++i) x(i, i) = 1;
    x(2 * m, 2 * m) = 2;
    push(x);
  }
  for (std::size_t a = 0; a < m; ++a)  // symmetric P block (top right)
    for (std::size_t b = a; b < m; ++b) {
      Matrix x(n, n);
      x(a, m + b) = 1;
      x(b, m + a) = 1;
      push(x);
    }
  for (std::size_t a = 0; a < m; ++a)  // symmetric Q block (bottom left)
    for (std::size_t b = a; b < m; ++b) {
      Matrix x(n, n);
      x(m + a, b) = 1;
      x(m + b, a) = 1;
      push(x);
    }
  for (std::size_t a = 0; a < 2 * m; ++a) {  // rows c_1^t, c_2^t
    Matrix x(n, n);
    x(2 * m, a) = 1;
    push(x);
  }
  return Subspace::span(n * n, gens);
}

bool heisenberg_derivation_shape_check(std::size_t m) {
  const Subspace solved = derivations(heisenberg(m)).space();
  const Subspace expected = heisenberg_derivation_template(m);
  return solved == expected && solved.dim() == 2 * m * m + 3 * m + 1;
}

namespace {

// Positions of the x/y-ordered block coordinates in the oscillator basis
// (delta, e_1, ..., e_2m, delta*): x_i = e_{2i-1}, y_i = e_{2i}.
std::size_t xpos(std::size_t a) { return 2 * a + 1; }
std::size_t ypos(std::size_t a) { return 2 * a + 2; }

Matrix skew_m_generator(std::size_t m, std::size_t a, std::size_t b) {
  const std::size_t n = 2 * m + 2;
  Matrix x(n, n);
  x(xpos(a), xpos(b)) = 1;
  x(xpos(b), xpos(a)) = -1;
  x(ypos(a), ypos(b)) = 1;
  x(ypos(b), ypos(a)) = -1;
  return x;
}

// [[0, P], [-P, 0]] for the symmetric unit P = E_ab + E_ba (or E_aa).
Matrix sym_p_generator(std::size_t m, std::size_t a, std::size_t b) {
  const std::size_t n = 2 * m + 2;
  Matrix x(n, n);
  x(xpos(a), ypos(b)) = 1;
  x(ypos(b), xpos(a)) = -1;
  if (a != b) {
    x(xpos(b), ypos(a)) = 1;
    x(ypos(a), xpos(b)) = -1;
  }
  return x;
}

std::vector<Matrix> t_generators(std::size_t m) {
  const std::size_t n = 2 * m + 2;
  std::vector<Matrix> gens;
  for (std::size_t a = 0; a < m; ++a) {  // b direction: delta -> x_a, x_a -> -delta*
    Matrix x(n, n);
    x(xpos(a), 0) = 1;
    x(n - 1, xpos(a)) = -1;
    gens.push_back(std::move(x));
  }
  for (std::size_t a = 0; a < m; ++a) {  // c direction: delta -> y_a, y_a -> -delta*
    Matrix x(n, n);
    x(ypos(a), 0) = 1;
    x(n - 1, ypos(a)) = -1;
    gens.push_back(std::move(x));
  }
  return gens;
}

std::vector<Matrix> s_generators(std::size_t m) {
  std::vector<Matrix> gens;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) gens.push_back(skew_m_generator(m, a, b));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) gens.push_back(sym_p_generator(m, a, b));
  return gens;
}

}  // namespace

std::vector<Matrix> oscillator_s2_generators(std::size_t m) {
  // Same blocks as su_model(m), in the same order: skew M units, then
  // off-diagonal symmetric units, then traceless diagonal differences.
  std::vector<Matrix> gens;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) gens.push_back(skew_m_generator(m, a, b));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) gens.push_back(sym_p_generator(m, a, b));
  for (std::size_t a = 0; a + 1 < m; ++a)
    gens.push_back(sym_p_generator(m, a, a) - sym_p_generator(m, a + 1, a + 1));
  return gens;
}

Subspace oscillator_s_template(std::size_t m) {
  std::vector<Vec> vecs;
  for (const auto& g : s_generators(m)) vecs.push_back(g.vectorize());
  return Subspace::span((2 * m + 2) * (2 * m + 2), vecs);
}

Subspace oscillator_t_template(std::size_t m) {
  std::vector<Vec> vecs;
  for (const auto& g : t_generators(m)) vecs.push_back(g.vectorize());
  return Subspace::span((2 * m + 2) * (2 * m + 2), vecs);
}

Subspace oscillator_skew_derivation_template(std::size_t m) {
  std::vector<Vec> vecs;
  for (const auto& g : s_generators(m)) vecs.push_back(g.vectorize());
  for (const auto& g : t_generators(m)) vecs.push_back(g.vectorize());
  return Subspace::span((2 * m + 2) * (2 * m + 2), vecs);
}

Subspace oscillator_derivation_template(std::size_t m) {
  const std::size_t n = 2 * m + 2;
  std::vector<Vec> vecs;
  for (const auto& g : s_generators(m)) vecs.push_back(g.vectorize());
  for (const auto& g : t_generators(m)) vecs.push_back(g.vectorize());
  {
    Matrix alpha(n, n);  // D_{0,1,2}: identity on V, 2 on delta*
    for (std::size_t i = 1; i <= 2 * m; ++i) alpha(i, i) = 1;
    alpha(n - 1, n - 1) = 2;
    vecs.push_back(alpha.vectorize());
  }
  {
    Matrix beta(n, n);  // D_{1,0,0}: delta -> delta*
    beta(n - 1, 0) = 1;
    vecs.push_back(beta.vectorize());
  }
  return Subspace::span(n * n, vecs);
}

OscillatorDerivationShape oscillator_derivation_shape_check(std::size_t m) {
  const OscillatorSpec spec(std::vector<Rational>(m, Rational(1)));
  const MetricLieAlgebra d = oscillator(spec);
  OscillatorDerivationShape out;
  const Subspace der = derivations(d.algebra).space();
  const Subspace skew = skew_derivations(d.algebra, d.form).space();
  out.der_dim = der.dim();
  out.skew_dim = skew.dim();
  out.der_matches_template = der == oscillator_derivation_template(m);
  out.skew_matches_template = skew == oscillator_skew_derivation_template(m);
  return out;
}

bool verify_oscillator_derivation_characterization(const OscillatorSpec& spec,
                                                   const LieAlgebra& g, const Matrix& d) {
  const std::size_t m = spec.m;
  const std::size_t n = 2 * m + 2;
  if (g.dim() != n || d.rows() != n || d.cols() != n)
    throw std::invalid_argument("characterization: dimension mismatch");

  // (a) nilradical invariance and restriction a derivation of it.
  const Subspace nil = oscillator_nilradical(m);
  for (const auto& v : nil.basis())
    if (!nil.contains(d.mul_vec(v))) return false;
  const LieAlgebra nil_alg = induced_subalgebra(g, nil, "n");
  Matrix restriction(n - 1, n - 1);
  for (std::size_t r = 0; r + 1 < n; ++r)
    for (std::size_t c = 0; c + 1 < n; ++c) restriction(r, c) = d(r + 1, c + 1);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j + 1 < n; ++j) {
      const Vec lhs = restriction.mul_vec(nil_alg.c(i, j));
      Vec rhs = nil_alg.bracket(restriction.col(i), nil_alg.basis_vector(j));
      vec_axpy(rhs, Rational(1), nil_alg.bracket(nil_alg.basis_vector(i), restriction.col(j)));
      if (lhs != rhs) return false;
    }

  // (b) D(delta*) is a multiple of delta*.
  for (std::size_t r = 0; r + 1 < n; ++r)
    if (!d(r, n - 1).is_zero()) return false;

  // (c) derivation law on the pairs (delta, e_k).
  for (std::size_t k = 1; k <= 2 * m; ++k) {
    const Vec lhs = d.mul_vec(g.c(0, k));
    Vec rhs = g.bracket(d.col(0), g.basis_vector(k));
    vec_axpy(rhs, Rational(1), g.bracket(g.basis_vector(0), d.col(k)));
    if (lhs != rhs) return false;
  }
  return true;
}

std::string to_string(OscillatorClass c) {
  switch (c) {
    case OscillatorClass::OI: return "O-I";
    case OscillatorClass::OII: return "O-II";
    case OscillatorClass::OIII: return "O-III";
  }
  return "?";
}

OscillatorClass predict_oscillator_class(const OscillatorSpec& spec) {
  if (spec.all_equal()) return OscillatorClass::OII;
  if (spec.all_distinct()) return OscillatorClass::OI;
  return OscillatorClass::OIII;
}

OscillatorClassReport oscillator_class_check(const std::vector<Rational>& lambda) {
  const OscillatorSpec spec(lambda);
  const MetricLieAlgebra d = oscillator(spec);
  const MatrixLieAlgebra skew = skew_derivations(d.algebra, d.form);
  const MatrixLieAlgebra inner = inner_derivations(d.algebra);

  OscillatorClassReport report;
  report.predicted = predict_oscillator_class(spec);
  report.skew_dim = skew.dim();
  report.inner_dim = inner.dim();
  if (!skew.contains(inner))
    throw std::runtime_error("oscillator_class_check: inner derivations not skew");

  // Quotient by the inner ideal, read through the abstract algebra of the
  // skew derivations.
  const LieAlgebra skew_abstract = skew.to_abstract();
  std::vector<Vec> inner_coords;
  for (const auto& b : inner.basis()) inner_coords.push_back(*skew.space().coordinates(b.vectorize()));
  const Subspace inner_ideal = Subspace::span(skew.dim(), inner_coords);
  const LieAlgebra outer = quotient_algebra(skew_abstract, inner_ideal, "o");
  report.outer_dim = outer.dim();
  report.outer_abelian = outer.is_abelian();
  report.outer_reductive = is_reductive(outer);
  report.outer_semisimple = is_semisimple(outer);

  if (spec.all_equal()) {
    const auto s2 = oscillator_s2_generators(spec.m);
    bool inside = true;
    for (const auto& gmat : s2)
      if (!skew.contains(gmat)) inside = false;
    if (inside && !s2.empty()) {
      const MatrixLieAlgebra s2_alg = MatrixLieAlgebra::from_span(2 * spec.m + 2, s2);
      if (is_semisimple(s2_alg)) report.semisimple_subalgebra_dim = s2_alg.dim();
    }
  }

  switch (report.predicted) {
    case OscillatorClass::OI:
      report.matches_prediction = report.outer_abelian;
      break;
    case OscillatorClass::OII:
      report.matches_prediction =
          report.semisimple_subalgebra_dim == spec.m * spec.m - 1 &&
          (spec.m == 1 || (report.outer_semisimple && report.outer_dim == spec.m * spec.m - 1));
      break;
    case OscillatorClass::OIII:
      report.matches_prediction = !report.outer_abelian && report.outer_reductive;
      break;
  }
  return report;
}

Theorem2Isomorphism theorem2_isomorphism_check(std::size_t m) {
  if (m < 2) throw std::invalid_argument("theorem2_isomorphism_check: m must be >= 2");
  const std::size_t n = 2 * m + 2;
  Theorem2Isomorphism out;

  const OscillatorSpec spec(std::vector<Rational>(m, Rational(1)));
  const MetricLieAlgebra d = oscillator(spec);
  const MatrixLieAlgebra skew = skew_derivations(d.algebra, d.form);

  const auto s2_gens = oscillator_s2_generators(m);
  out.s2_inside_skew = true;
  for (const auto& g : s2_gens)
    if (!skew.contains(g)) out.s2_inside_skew = false;

  MatrixLieAlgebra s2;
  try {
    s2 = MatrixLieAlgebra::from_span(n, s2_gens);
    out.s2_closed = true;
  } catch (const std::invalid_argument&) {
    return out;
  }
  out.s2_dim = s2.dim();

  const MatrixLieAlgebra su = su_model(m);
  out.su_dim = su.dim();

  // Block reading (M, P0) -> (M, -P0): su entry layout [[M, -P0], [P0, M]].
  auto block_read = [&](const Matrix& big) {
    Matrix small(2 * m, 2 * m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) {
        small(r, c) = big(xpos(r), xpos(c));
        small(m + r, m + c) = big(xpos(r), xpos(c));
        small(r, m + c) = -big(xpos(r), ypos(c));
        small(m + r, c) = big(xpos(r), ypos(c));
      }
    return small;
  };

  std::vector<Vec> image_vecs;
  bool images_in_su = true;
  for (const auto& a : s2.basis()) {
    const Matrix img = block_read(a);
    if (!su.contains(img)) images_in_su = false;
    image_vecs.push_back(img.vectorize());
  }
  out.map_bijective = images_in_su && s2.dim() == su.dim() &&
                      Subspace::span(4 * m * m, image_vecs).dim() == s2.dim();
  out.brackets_match = true;
  for (std::size_t a = 0; a < s2.dim() && out.brackets_match; ++a)
    for (std::size_t b = a + 1; b < s2.dim(); ++b) {
      const Matrix lhs = block_read(Matrix::commutator(s2.basis()[a], s2.basis()[b]));
      const Matrix rhs =
          Matrix::commutator(block_read(s2.basis()[a]), block_read(s2.basis()[b]));
      if (!(lhs == rhs)) {
        out.brackets_match = false;
        break;
      }
    }
  out.killing_nondegenerate = is_semisimple(s2) && is_semisimple(su);
  return out;
}

}  // namespace quadlie
