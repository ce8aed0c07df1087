#include "quadlie/constructions.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace quadlie {

LieAlgebra heisenberg(std::size_t m) {
  if (m < 1) throw std::invalid_argument("heisenberg: m must be >= 1");
  const std::size_t n = 2 * m + 1;
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= 2 * m; ++i) labels.push_back("u" + std::to_string(i));
  labels.push_back("z");
  std::vector<LieAlgebra::BracketEntry> brackets;
  for (std::size_t i = 0; i < m; ++i) {
    Vec z(n);
    z[n - 1] = 1;
    brackets.push_back({i, m + i, std::move(z)});
  }
  return LieAlgebra::from_brackets(std::move(labels), brackets);
}

OscillatorSpec::OscillatorSpec(std::vector<Rational> lambda_in, Rational t_in, Rational s_in)
    : m(lambda_in.size()), lambda(std::move(lambda_in)), t(std::move(t_in)), s(std::move(s_in)) {
  validate();
}

void OscillatorSpec::validate() const {
  if (m < 1 || lambda.size() != m)
    throw std::invalid_argument("OscillatorSpec: need at least one frequency");
  for (const auto& l : lambda)
    if (l.sign() <= 0) throw std::invalid_argument("OscillatorSpec: frequencies must be positive");
  for (std::size_t i = 1; i < m; ++i)
    if (lambda[i] < lambda[i - 1])
      throw std::invalid_argument("OscillatorSpec: frequencies must be ascending");
  if (s.is_zero()) throw std::invalid_argument("OscillatorSpec: s must be nonzero");
}

bool OscillatorSpec::all_equal() const {
  for (std::size_t i = 1; i < m; ++i)
    if (lambda[i] != lambda[0]) return false;
  return true;
}

bool OscillatorSpec::all_distinct() const {
  for (std::size_t i = 1; i < m; ++i)
    if (lambda[i] == lambda[i - 1]) return false;  // ascending, so equals are adjacent
  return true;
}

BilinearForm oscillator_form(std::size_t m, const Rational& t, const Rational& s) {
  const std::size_t n = 2 * m + 2;
  Matrix gram(n, n);
  gram(0, 0) = t;
  gram(0, n - 1) = s;
  gram(n - 1, 0) = s;
  for (std::size_t i = 1; i <= 2 * m; ++i) gram(i, i) = s;
  return BilinearForm(std::move(gram));
}

MetricLieAlgebra oscillator(const OscillatorSpec& spec) {
  spec.validate();
  const std::size_t m = spec.m;
  const std::size_t n = 2 * m + 2;
  std::vector<std::string> labels{"delta"};
  for (std::size_t i = 1; i <= 2 * m; ++i) labels.push_back("e" + std::to_string(i));
  labels.push_back("delta*");

  std::vector<LieAlgebra::BracketEntry> brackets;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t x = 2 * i + 1, y = 2 * i + 2;
    const Rational& l = spec.lambda[i];
    Vec star(n);
    star[n - 1] = l;
    brackets.push_back({x, y, std::move(star)});
    Vec dy(n);
    dy[y] = l;
    brackets.push_back({0, x, std::move(dy)});
    Vec dx(n);
    dx[x] = -l;
    brackets.push_back({0, y, std::move(dx)});
  }
  return {LieAlgebra::from_brackets(std::move(labels), brackets),
          oscillator_form(m, spec.t, spec.s)};
}

Subspace oscillator_nilradical(std::size_t m) {
  const std::size_t n = 2 * m + 2;
  std::vector<Vec> basis;
  for (std::size_t i = 1; i < n; ++i) {
    Vec v(n);
    v[i] = 1;
    basis.push_back(std::move(v));
  }
  return Subspace::span(n, basis);
}

Matrix oscillator_rescaling_map(std::size_t m, const Rational& c) {
  if (c.is_zero()) throw std::invalid_argument("oscillator_rescaling_map: c must be nonzero");
  const std::size_t n = 2 * m + 2;
  Matrix t = Matrix::identity(n);
  t(0, 0) = Rational(1) / c;
  t(n - 1, n - 1) = c;
  return t;
}

namespace {

std::string pair_text(const std::string& what, std::size_t i, std::size_t j) {
  std::ostringstream os;
  os << what << " fails at basis pair (" << i << ", " << j << ")";
  return os.str();
}

void validate_extension_input(const ExtensionInput& input) {
  const LieAlgebra& g = input.base.algebra;
  const BilinearForm& phi = input.base.form;
  const std::size_t n = g.dim();
  if (phi.dim() != n) throw std::invalid_argument("double_extension: form/algebra dim mismatch");
  if (!phi.is_symmetric()) throw std::invalid_argument("double_extension: base form not symmetric");
  if (!phi.is_nondegenerate())
    throw std::invalid_argument("double_extension: base form degenerate");
  if (!check_invariance(g, phi).empty())
    throw std::invalid_argument("double_extension: base form not invariant");
  if (input.hom.size() != input.extender.dim())
    throw std::invalid_argument("double_extension: one image per extender basis element required");

  for (std::size_t l = 0; l < input.hom.size(); ++l) {
    const Matrix& d = input.hom[l];
    if (d.rows() != n || d.cols() != n)
      throw std::invalid_argument("double_extension: image " + std::to_string(l) +
                                  " has wrong shape");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Vec lhs = d.mul_vec(g.c(i, j));
        Vec rhs = g.bracket(d.col(i), g.basis_vector(j));
        vec_axpy(rhs, Rational(1), g.bracket(g.basis_vector(i), d.col(j)));
        if (lhs != rhs)
          throw std::invalid_argument(
              pair_text("double_extension: image " + std::to_string(l) + " derivation law", i, j));
      }
    const Matrix skew = d.transpose() * phi.gram() + phi.gram() * d;
    if (!skew.is_zero())
      throw std::invalid_argument("double_extension: image " + std::to_string(l) +
                                  " is not phi-skew");
  }
  for (std::size_t l = 0; l < input.hom.size(); ++l)
    for (std::size_t p = l + 1; p < input.hom.size(); ++p) {
      Matrix expected(n, n);
      const Vec& c = input.extender.c(l, p);
      for (std::size_t q = 0; q < input.hom.size(); ++q)
        if (!c[q].is_zero()) expected = expected + c[q] * input.hom[q];
      if (!(Matrix::commutator(input.hom[l], input.hom[p]) == expected))
        throw std::invalid_argument(pair_text("double_extension: homomorphism law", l, p));
    }
}

}  // namespace

ExtensionResult double_extension(const ExtensionInput& input) {
  validate_extension_input(input);
  const LieAlgebra& g = input.base.algebra;
  const BilinearForm& phi = input.base.form;
  const LieAlgebra& b = input.extender;
  const std::size_t n = g.dim();
  const std::size_t k = b.dim();
  const std::size_t total = 2 * k + n;
  // Index layout: b_l -> l, a_i -> k + i, beta_l -> k + n + l.

  std::vector<std::string> labels;
  for (std::size_t l = 0; l < k; ++l) labels.push_back(b.labels()[l]);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(g.labels()[i]);
  for (std::size_t l = 0; l < k; ++l) labels.push_back(b.labels()[l] + "*");

  std::vector<LieAlgebra::BracketEntry> brackets;
  // [b_l, b_p] = [b_l, b_p]_b + (beta -> coadjoint) terms vanish for pure b inputs.
  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t p = l + 1; p < k; ++p) {
      Vec v(total);
      for (std::size_t q = 0; q < k; ++q) v[q] = b.c(l, p)[q];
      if (!vec_is_zero(v)) brackets.push_back({l, p, std::move(v)});
    }
  // [b_l, a_i] = phi(b_l)(a_i).
  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t i = 0; i < n; ++i) {
      const Vec img = input.hom[l].col(i);
      Vec v(total);
      for (std::size_t q = 0; q < n; ++q) v[k + q] = img[q];
      if (!vec_is_zero(v)) brackets.push_back({l, k + i, std::move(v)});
    }
  // [a_i, a_j] = [a_i, a_j]_g + w(a_i, a_j), with w(a,a')(b_l) = phi(phi(b_l)a, a').
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec v(total);
      const Vec& cg = g.c(i, j);
      for (std::size_t q = 0; q < n; ++q) v[k + q] = cg[q];
      for (std::size_t l = 0; l < k; ++l)
        v[k + n + l] = phi.eval(input.hom[l].col(i), g.basis_vector(j));
      if (!vec_is_zero(v)) brackets.push_back({k + i, k + j, std::move(v)});
    }
  // [b_l, beta_p] is the coadjoint action, the functional b_q -> beta_p([b_q, b_l]),
  // i.e. coordinates c_b(q,l)[p] on beta_q.
  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t p = 0; p < k; ++p) {
      Vec v(total);
      for (std::size_t q = 0; q < k; ++q) v[k + n + q] = b.c(q, l)[p];
      if (!vec_is_zero(v)) brackets.push_back({l, k + n + p, std::move(v)});
    }

  LieAlgebra extended = LieAlgebra::from_brackets(std::move(labels), brackets);

  Matrix gram(total, total);
  for (std::size_t l = 0; l < k; ++l) {
    gram(l, k + n + l) = 1;
    gram(k + n + l, l) = 1;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram(k + i, k + j) = phi.gram()(i, j);
  BilinearForm extended_form{std::move(gram)};

  const auto jacobi_bad = check_jacobi(extended);
  if (!jacobi_bad.empty()) {
    const auto& t = jacobi_bad.front();
    throw std::runtime_error("double_extension: Jacobi fails at (" + std::to_string(t[0]) + "," +
                             std::to_string(t[1]) + "," + std::to_string(t[2]) + ")");
  }
  const auto inv_bad = check_invariance(extended, extended_form);
  if (!inv_bad.empty()) throw std::runtime_error("double_extension: extended form not invariant");
  const Rational gram_det = det(extended_form.gram());
  if (gram_det.is_zero()) throw std::runtime_error("double_extension: extended form degenerate");

  ExtensionCertificate cert;
  cert.jacobi_triples_checked = total * (total - 1) * (total - 2) / 6;
  cert.invariance_triples_checked = total * total * total;
  cert.gram_det = gram_det;
  return {{std::move(extended), std::move(extended_form)}, std::move(cert)};
}

MatrixLieAlgebra su_model(std::size_t m) {
  if (m < 2) throw std::invalid_argument("su_model: m must be >= 2");
  const std::size_t n = 2 * m;
  std::vector<Matrix> gens;
  // Skew M in both diagonal blocks.
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      Matrix x(n, n);
      x(a, b) = 1;
      x(b, a) = -1;
      x(m + a, m + b) = 1;
      x(m + b, m + a) = -1;
      gens.push_back(std::move(x));
    }
  // Symmetric traceless P in the off-diagonal blocks.
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      Matrix x(n, n);
      x(a, m + b) = 1;
      x(b, m + a) = 1;
      x(m + a, b) = -1;
      x(m + b, a) = -1;
      gens.push_back(std::move(x));
    }
  for (std::size_t a = 0; a + 1 < m; ++a) {
    Matrix x(n, n);
    x(a, m + a) = 1;
    x(a + 1, m + a + 1) = -1;
    x(m + a, a) = -1;
    x(m + a + 1, a + 1) = 1;
    gens.push_back(std::move(x));
  }
  return MatrixLieAlgebra::from_span(n, gens);
}

MatrixLieAlgebra so_model(std::size_t m) {
  if (m < 2) throw std::invalid_argument("so_model: m must be >= 2");
  std::vector<Matrix> gens;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      Matrix x(m, m);
      x(a, b) = 1;
      x(b, a) = -1;
      gens.push_back(std::move(x));
    }
  return MatrixLieAlgebra::from_span(m, gens);
}

namespace {

// Oscillator basis positions of the x/y-ordered block index (x_i = e_{2i-1},
// y_i = e_{2i}, with delta first).
std::size_t interleaved_position(std::size_t m, std::size_t block_index) {
  return block_index < m ? 2 * block_index + 1 : 2 * (block_index - m) + 2;
}

// Pads a 2m x 2m V-block map to a (2m+2) x (2m+2) matrix vanishing on
// delta and delta*.
Matrix embed_v_block(std::size_t m, const Matrix& block) {
  const std::size_t n = 2 * m + 2;
  Matrix big(n, n);
  for (std::size_t r = 0; r < 2 * m; ++r)
    for (std::size_t c = 0; c < 2 * m; ++c)
      big(interleaved_position(m, r), interleaved_position(m, c)) = block(r, c);
  return big;
}

}  // namespace

std::vector<Matrix> mixed_extension_hom(std::size_t m, MixedKind kind) {
  std::vector<Matrix> images;
  const MatrixLieAlgebra model = kind == MixedKind::su ? su_model(m) : so_model(m);
  if (kind == MixedKind::su) {
    for (const auto& b : model.basis()) images.push_back(embed_v_block(m, b));
  } else {
    for (const auto& b : model.basis()) {
      // so(m) block M acts diagonally on the x and y halves.
      Matrix block(2 * m, 2 * m);
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) {
          block(r, c) = b(r, c);
          block(m + r, m + c) = b(r, c);
        }
      images.push_back(embed_v_block(m, block));
    }
  }
  return images;
}

ExtensionResult mixed_double_extension(std::size_t m, MixedKind kind) {
  if (kind == MixedKind::su && m < 2)
    throw std::invalid_argument("mixed_double_extension: su kind needs m >= 2");
  if (kind == MixedKind::so && m < 3)
    throw std::invalid_argument("mixed_double_extension: so kind needs m >= 3");
  const OscillatorSpec spec(std::vector<Rational>(m, Rational(1)));
  ExtensionInput input{oscillator(spec),
                       (kind == MixedKind::su ? su_model(m) : so_model(m))
                           .to_abstract(kind == MixedKind::su ? "su" : "so"),
                       mixed_extension_hom(m, kind)};
  return double_extension(input);
}

DecomposabilityReport find_orthogonal_ideal_splitting(const MetricLieAlgebra& g) {
  const std::size_t n = g.algebra.dim();
  std::vector<Subspace> candidates;
  const Subspace z = center(g.algebra);
  // All spans of subsets of the center basis, smallest first.
  if (z.dim() > 0 && z.dim() <= 16) {
    std::vector<std::pair<std::size_t, unsigned long>> masks;
    for (unsigned long mask = 1; mask < (1ul << z.dim()); ++mask)
      masks.emplace_back(std::popcount(mask), mask);
    std::sort(masks.begin(), masks.end());
    for (const auto& [size, mask] : masks) {
      std::vector<Vec> vectors;
      for (std::size_t i = 0; i < z.dim(); ++i)
        if (mask & (1ul << i)) vectors.push_back(z.basis()[i]);
      candidates.push_back(Subspace::span(n, vectors));
    }
  }
  for (const auto& term : derived_series(g.algebra)) candidates.push_back(term);
  for (const auto& term : lower_central_series(g.algebra)) candidates.push_back(term);
  candidates.push_back(subspace_intersection(z, derived_subalgebra(g.algebra)));

  DecomposabilityReport report;
  for (const auto& s : candidates) {
    if (s.dim() == 0 || s.dim() == n) continue;
    if (!is_ideal(g.algebra, s).is_ideal) continue;
    Matrix restricted(s.dim(), s.dim());
    for (std::size_t a = 0; a < s.dim(); ++a)
      for (std::size_t b = 0; b < s.dim(); ++b)
        restricted(a, b) = g.form.eval(s.basis()[a], s.basis()[b]);
    if (det(restricted).is_zero()) continue;
    report.witness_found = true;
    report.ideal = s;
    report.complement = orthogonal_complement(g.form, s);
    return report;
  }
  return report;
}

DecomposabilityReport d4_skew_extension_decomposability(const Matrix& hom_image) {
  const OscillatorSpec spec({Rational(1)});
  ExtensionInput input{oscillator(spec), LieAlgebra::from_brackets({"b1"}, {}), {hom_image}};
  return find_orthogonal_ideal_splitting(double_extension(input).extended);
}

}  // namespace quadlie
