#ifndef QUADLIE_DERIVATIONS_HPP
#define QUADLIE_DERIVATIONS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quadlie/forms.hpp"
#include "quadlie/lie_algebra.hpp"
#include "quadlie/linalg.hpp"
#include "quadlie/matrix.hpp"

namespace quadlie {

/// Lie algebra of n x n matrices under the commutator, stored as the
/// canonical subspace of the n^2-dimensional matrix space together with a
/// closure certificate: for every basis pair (a, b), the coordinates of
/// [A_a, A_b] in the basis. Construction fails if the span is not closed.
class MatrixLieAlgebra {
 public:
  static MatrixLieAlgebra from_span(std::size_t ambient_dim, const std::vector<Matrix>& generators);
  static MatrixLieAlgebra from_subspace(std::size_t ambient_dim, const Subspace& space);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Matrix>& basis() const { return basis_; }
  const Subspace& space() const { return space_; }
  const Vec& certificate(std::size_t a, std::size_t b) const { return certificate_[a][b]; }

  bool contains(const Matrix& m) const { return space_.contains(m.vectorize()); }
  bool contains(const MatrixLieAlgebra& other) const { return space_.contains(other.space_); }

  /// Abstract algebra with structure constants read off the certificate;
  /// validated against Jacobi.
  LieAlgebra to_abstract(const std::string& label_prefix = "D") const;

  friend bool operator==(const MatrixLieAlgebra& a, const MatrixLieAlgebra& b) {
    return a.ambient_ == b.ambient_ && a.space_ == b.space_;
  }

 private:
  std::size_t ambient_ = 0;
  Subspace space_;                       // canonical, in n^2 coordinates
  std::vector<Matrix> basis_;            // unvectorized canonical basis
  std::vector<std::vector<Vec>> certificate_;
};

/// All derivations of g: the null space of D[e_i,e_j] = [D e_i, e_j] + [e_i, D e_j].
MatrixLieAlgebra derivations(const LieAlgebra& g);

/// span{ad e_i}; dim = dim g - dim Z(g).
MatrixLieAlgebra inner_derivations(const LieAlgebra& g);

/// Derivations that are additionally phi-skew. Throws unless phi is
/// symmetric, invariant and nondegenerate.
MatrixLieAlgebra skew_derivations(const LieAlgebra& g, const BilinearForm& phi);

struct DerivationProfile {
  MatrixLieAlgebra der;
  MatrixLieAlgebra inner;
  std::optional<MatrixLieAlgebra> skew;
};
DerivationProfile derivation_profile(const LieAlgebra& g,
                                     const std::optional<BilinearForm>& phi = std::nullopt);

BilinearForm killing_form(const MatrixLieAlgebra& m);
bool is_semisimple(const MatrixLieAlgebra& m);
bool is_abelian(const MatrixLieAlgebra& m);
bool is_reductive(const MatrixLieAlgebra& m);

}  // namespace quadlie

#endif  // QUADLIE_DERIVATIONS_HPP
