#ifndef QUADLIE_OSCILLATOR_ANALYSIS_HPP
#define QUADLIE_OSCILLATOR_ANALYSIS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "quadlie/constructions.hpp"
#include "quadlie/derivations.hpp"
#include "quadlie/lie_algebra.hpp"
#include "quadlie/linalg.hpp"

namespace quadlie {

/// Span of the block-shaped Heisenberg derivations on the standard basis
/// u_1..u_2m, z: blocks M + aI, P, Q (P, Q symmetric), -M^t + aI, rows
/// c_1^t, c_2^t and corner 2a. Dimension 2m^2 + 3m + 1.
Subspace heisenberg_derivation_template(std::size_t m);

/// True iff the derivation solver on h_{2m+1} returns exactly the
/// template span (hence dim 2m^2 + 3m + 1).
bool heisenberg_derivation_shape_check(std::size_t m);

/// Template spans for derivations of d_{2m+2}(1,...,1) on the basis
/// delta, e_1..e_2m, delta*. The full template adds the scaling direction
/// (alpha) and the delta -> delta* direction (beta) to the skew template.
Subspace oscillator_derivation_template(std::size_t m);
Subspace oscillator_skew_derivation_template(std::size_t m);
/// The V-block subalgebra s: [[M, P], [-P, M]] with M skew, P symmetric.
Subspace oscillator_s_template(std::size_t m);
/// Its derived part s^2: P constrained to be traceless. Dimension m^2 - 1.
std::vector<Matrix> oscillator_s2_generators(std::size_t m);
/// The abelian part t = span{ad x_i, ad y_i}. Dimension 2m.
Subspace oscillator_t_template(std::size_t m);

struct OscillatorDerivationShape {
  bool der_matches_template = false;
  bool skew_matches_template = false;
  std::size_t der_dim = 0;
  std::size_t skew_dim = 0;
};
/// Compares solver output with the templates for d_{2m+2}(1,...,1).
OscillatorDerivationShape oscillator_derivation_shape_check(std::size_t m);

/// The three oscillator-algebra conditions equivalent to D being a
/// derivation: (a) the nilradical is D-invariant and the restriction is a
/// derivation of it, (b) D(delta*) is a multiple of delta*, (c) the
/// derivation law holds on pairs (delta, e_k).
bool verify_oscillator_derivation_characterization(const OscillatorSpec& spec,
                                                   const LieAlgebra& g, const Matrix& d);

enum class OscillatorClass { OI, OII, OIII };
std::string to_string(OscillatorClass c);

/// Class predicted from the multiplicity pattern of lambda.
OscillatorClass predict_oscillator_class(const OscillatorSpec& spec);

/// Observed properties of the phi_{0,1}-skew derivation algebra of d(lambda).
/// The class claims concern the skew derivations modulo the inner ones
/// (which are skew for every invariant metric and never abelian), so the
/// observables are read off the quotient der_phi / inner; for equal
/// frequencies the semisimple su-factor inside the full skew algebra is
/// exhibited explicitly via the block template.
struct OscillatorClassReport {
  OscillatorClass predicted = OscillatorClass::OI;
  std::size_t skew_dim = 0;
  std::size_t inner_dim = 0;
  std::size_t outer_dim = 0;       // dim of der_phi / inner
  bool outer_abelian = false;
  bool outer_reductive = false;
  bool outer_semisimple = false;
  /// Dimension of the verified semisimple subalgebra of the full skew
  /// algebra (m^2 - 1 via the su block template; 0 when not exhibited).
  std::size_t semisimple_subalgebra_dim = 0;
  bool matches_prediction = false;
};
OscillatorClassReport oscillator_class_check(const std::vector<Rational>& lambda);

/// Checks that s^2 extracted from the skew derivations of d_{2m+2}(1,..,1)
/// is isomorphic to su_model(m) under block reading (M, P0) -> (M, -P0).
struct Theorem2Isomorphism {
  bool s2_inside_skew = false;
  bool s2_closed = false;
  bool map_bijective = false;
  bool brackets_match = false;
  bool killing_nondegenerate = false;
  std::size_t s2_dim = 0;
  std::size_t su_dim = 0;
  bool ok() const {
    return s2_inside_skew && s2_closed && map_bijective && brackets_match &&
           killing_nondegenerate && s2_dim == su_dim;
  }
};
Theorem2Isomorphism theorem2_isomorphism_check(std::size_t m);

}  // namespace quadlie

#endif  // QUADLIE_OSCILLATOR_ANALYSIS_HPP
