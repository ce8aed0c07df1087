#ifndef QUADLIE_LIE_ALGEBRA_HPP
#define QUADLIE_LIE_ALGEBRA_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "quadlie/linalg.hpp"
#include "quadlie/matrix.hpp"

namespace quadlie {

/// Finite-dimensional Lie algebra over the rationals, given by structure
/// constants: c(i,j) is the coordinate vector of [e_i, e_j].
///
/// Antisymmetry is validated at construction; the Jacobi identity is
/// checked separately via check_jacobi so that deliberately broken tables
/// can still be represented in tests and error reports.
class LieAlgebra {
 public:
  LieAlgebra(std::vector<std::string> labels, std::vector<std::vector<Vec>> c);

  static LieAlgebra abelian(std::size_t dim);
  /// Builds the structure tensor from the i<j entries only, filling the
  /// antisymmetric counterparts.
  struct BracketEntry {
    std::size_t i, j;
    Vec v;
  };
  static LieAlgebra from_brackets(std::vector<std::string> labels,
                                  const std::vector<BracketEntry>& brackets);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vec& c(std::size_t i, std::size_t j) const { return c_[i][j]; }

  Vec bracket(const Vec& x, const Vec& y) const;
  /// Matrix of ad x : v -> [x, v].
  Matrix ad(const Vec& x) const;
  Matrix ad_basis(std::size_t i) const;

  Vec basis_vector(std::size_t i) const;

  bool is_abelian() const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::vector<Vec>> c_;
};

/// Violating (i, j, k) triples with i < j < k; empty iff Jacobi holds.
std::vector<std::array<std::size_t, 3>> check_jacobi(const LieAlgebra& g);

/// Span of [x, y] over basis vectors x of a and y of b.
Subspace bracket_subspaces(const LieAlgebra& g, const Subspace& a, const Subspace& b);

/// D_0 = g, D_{k+1} = [D_k, D_k], listed until it stabilizes (0-based).
std::vector<Subspace> derived_series(const LieAlgebra& g);
/// C_1 = g, C_{k+1} = [g, C_k], listed until it stabilizes.
std::vector<Subspace> lower_central_series(const LieAlgebra& g);
/// Z_0 = 0, Z_{k+1} = {x : [g, x] in Z_k}, listed until it stabilizes.
std::vector<Subspace> upper_central_series(const LieAlgebra& g);

Subspace center(const LieAlgebra& g);
Subspace derived_subalgebra(const LieAlgebra& g);

bool is_solvable(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);

struct IdealReport {
  Subspace subspace;
  bool is_ideal = false;
  /// (i, v) pairs where [e_i, v] escapes the subspace; empty iff ideal.
  std::vector<std::pair<std::size_t, Vec>> witnesses;
};
IdealReport is_ideal(const LieAlgebra& g, const Subspace& s);

struct StructureSummary {
  std::size_t derived_dim = 0;
  std::size_t center_dim = 0;
  /// True iff the derived algebra is the unique maximal ideal. For a
  /// solvable algebra every maximal ideal is a codimension-1 subspace
  /// containing g^2, so this reduces to codim(g^2) = 1.
  bool local = false;
};
StructureSummary structure_summary(const LieAlgebra& g);

/// Restricts g to a subspace closed under the bracket. Throws if the
/// subspace is not closed.
LieAlgebra induced_subalgebra(const LieAlgebra& g, const Subspace& s,
                              const std::string& label_prefix = "s");

/// Quotient g / I by an ideal, on the complement basis of the ideal's
/// pivot coordinates. Throws if I is not an ideal.
LieAlgebra quotient_algebra(const LieAlgebra& g, const Subspace& ideal,
                            const std::string& label_prefix = "q");

/// Center equals derived algebra and both are one-dimensional.
bool is_heisenberg_type(const LieAlgebra& g);

/// T is invertible and T[x,y]_from = [Tx,Ty]_to on all basis pairs.
bool is_lie_isomorphism(const Matrix& t, const LieAlgebra& from, const LieAlgebra& to);

}  // namespace quadlie

#endif  // QUADLIE_LIE_ALGEBRA_HPP
