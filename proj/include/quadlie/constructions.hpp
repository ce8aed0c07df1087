#ifndef QUADLIE_CONSTRUCTIONS_HPP
#define QUADLIE_CONSTRUCTIONS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "quadlie/derivations.hpp"
#include "quadlie/forms.hpp"
#include "quadlie/lie_algebra.hpp"
#include "quadlie/matrix.hpp"

namespace quadlie {

struct MetricLieAlgebra {
  LieAlgebra algebra;
  BilinearForm form;
};

/// Heisenberg algebra of dimension 2m+1 on the standard basis
/// u_1..u_2m, z with [u_i, u_{m+i}] = z.
LieAlgebra heisenberg(std::size_t m);

/// Parameters of an oscillator algebra: frequencies lambda (positive,
/// ascending) and the metric parameters of phi_{t,s} (s != 0).
struct OscillatorSpec {
  std::size_t m = 1;
  std::vector<Rational> lambda;
  Rational t = 0;
  Rational s = 1;

  OscillatorSpec(std::vector<Rational> lambda_in, Rational t_in = 0, Rational s_in = 1);
  /// Throws std::invalid_argument on violated constraints.
  void validate() const;
  bool all_equal() const;
  bool all_distinct() const;
};

/// Gram matrix of phi_{t,s} on the ordered basis delta, e_1..e_2m, delta*:
/// delta and delta* isotropic and paired with s, e_i orthogonal of norm s,
/// phi(delta, delta) = t.
BilinearForm oscillator_form(std::size_t m, const Rational& t, const Rational& s);

/// Oscillator algebra of dimension 2m+2 on the basis delta, e_1..e_2m,
/// delta* with [e_{2i-1}, e_{2i}] = lambda_i delta*, [delta, e_{2i-1}] =
/// lambda_i e_{2i}, [delta, e_{2i}] = -lambda_i e_{2i-1}, delta* central;
/// metric phi_{t,s}.
MetricLieAlgebra oscillator(const OscillatorSpec& spec);

/// The nilradical span{e_1..e_2m, delta*} inside a (2m+2)-dim oscillator.
Subspace oscillator_nilradical(std::size_t m);

/// Basis change witnessing d(1,...,1) = d(c,...,c): delta -> delta/c,
/// e_i -> e_i, delta* -> c delta*. Satisfies T[x,y]_{d(1)} = [Tx,Ty]_{d(c)}.
Matrix oscillator_rescaling_map(std::size_t m, const Rational& c);

/// Double-extension input: a metric algebra, an extending algebra b, and
/// the images phi(b_i), one matrix per basis element of b. The images must
/// be phi-skew derivations of the base and b_i -> phi(b_i) must be a Lie
/// homomorphism; all of it is verified before anything is built.
struct ExtensionInput {
  MetricLieAlgebra base;
  LieAlgebra extender;
  std::vector<Matrix> hom;
};

struct ExtensionCertificate {
  std::size_t jacobi_triples_checked = 0;
  std::size_t invariance_triples_checked = 0;
  Rational gram_det;
};

struct ExtensionResult {
  MetricLieAlgebra extended;
  ExtensionCertificate certificate;
};

/// The double extension b + g + b* with the cocycle w(a,a')(b) =
/// phi(phi(b)(a), a') and the coadjoint terms, and the hyperbolic
/// extension of the base form. Throws std::invalid_argument with the
/// violating basis pair on any precondition failure; Jacobi, invariance
/// and nondegeneracy of the result are verified before returning.
ExtensionResult double_extension(const ExtensionInput& input);

/// Compact real form su(m) as 2m x 2m blocks [[M, P], [-P, M]] with
/// M skew, P symmetric traceless; dim m^2 - 1.
MatrixLieAlgebra su_model(std::size_t m);
/// so(m) as m x m skew-symmetric matrices; dim m(m-1)/2.
MatrixLieAlgebra so_model(std::size_t m);

enum class MixedKind { su, so };

/// Double extension of the oscillator d_{2m+2}(1,..,1) with phi_{0,1} by
/// su(m) (m >= 2) or so(m) (m >= 3) embedded into its skew derivations.
ExtensionResult mixed_double_extension(std::size_t m, MixedKind kind);

/// Embedding of the model algebra basis into (2m+2) x (2m+2) skew
/// derivations of d_{2m+2}(1,...,1), in the order of su_model/so_model.
std::vector<Matrix> mixed_extension_hom(std::size_t m, MixedKind kind);

/// Searches the dim-6 double extension of d_4 by a 1-dim algebra for an
/// orthogonal-ideal splitting: a proper nonzero ideal on which the
/// extended form is nondegenerate. Candidates are generated from the
/// center and the derived series; absence of a witness is reported as
/// such, never as indecomposability.
struct DecomposabilityReport {
  bool witness_found = false;
  Subspace ideal;        // the witness (nondegenerate proper ideal), if found
  Subspace complement;   // its orthogonal complement
};
DecomposabilityReport find_orthogonal_ideal_splitting(const MetricLieAlgebra& g);
DecomposabilityReport d4_skew_extension_decomposability(const Matrix& hom_image);

}  // namespace quadlie

#endif  // QUADLIE_CONSTRUCTIONS_HPP
