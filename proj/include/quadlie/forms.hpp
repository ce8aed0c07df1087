#ifndef QUADLIE_FORMS_HPP
#define QUADLIE_FORMS_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "quadlie/lie_algebra.hpp"
#include "quadlie/linalg.hpp"
#include "quadlie/matrix.hpp"

namespace quadlie {

/// Bilinear form on an algebra's basis, represented by its Gram matrix.
class BilinearForm {
 public:
  explicit BilinearForm(Matrix gram);

  const Matrix& gram() const { return gram_; }
  std::size_t dim() const { return gram_.rows(); }

  Rational eval(const Vec& x, const Vec& y) const;

  bool is_symmetric() const { return gram_.is_symmetric(); }
  bool is_skew() const;
  bool is_nondegenerate() const { return !det(gram_).is_zero(); }

  BilinearForm transposed() const { return BilinearForm(gram_.transpose()); }
  BilinearForm symmetric_part() const;
  BilinearForm skew_part() const;

  friend bool operator==(const BilinearForm& a, const BilinearForm& b) {
    return a.gram_ == b.gram_;
  }

 private:
  Matrix gram_;
};

/// Violating ordered triples (i, j, k) of phi([e_i,e_j],e_k) + phi(e_j,[e_i,e_k]) = 0.
std::vector<std::array<std::size_t, 3>> check_invariance(const LieAlgebra& g,
                                                         const BilinearForm& phi);

/// The space B_inv(g) of all invariant bilinear forms, with its
/// symmetric/skew split.
class InvariantFormSpace {
 public:
  InvariantFormSpace(const LieAlgebra& g, std::vector<BilinearForm> basis,
                     std::vector<BilinearForm> sym_basis, std::vector<BilinearForm> skew_basis);

  const LieAlgebra& algebra() const { return algebra_; }
  const std::vector<BilinearForm>& basis() const { return basis_; }
  const std::vector<BilinearForm>& sym_basis() const { return sym_basis_; }
  const std::vector<BilinearForm>& skew_basis() const { return skew_basis_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t sym_dim() const { return sym_basis_.size(); }
  std::size_t skew_dim() const { return skew_basis_.size(); }

 private:
  LieAlgebra algebra_;
  std::vector<BilinearForm> basis_, sym_basis_, skew_basis_;
};

/// Solves the invariance equations over all ordered basis triples
/// (n^2 unknowns, n^3 equations) and splits the solution space.
InvariantFormSpace invariant_forms(const LieAlgebra& g);

/// dim B_inv(g).
std::size_t metric_dimension(const LieAlgebra& g);

/// A nondegenerate rational combination of the symmetric basis, or nullopt
/// if every combination is degenerate. The generic-combination determinant
/// is a polynomial of degree <= n in each coefficient, so it vanishes
/// identically iff it vanishes on a grid of n+1 values per coefficient;
/// the grid is scanned deterministically and the first nonzero point wins.
std::optional<BilinearForm> find_nondegenerate_symmetric(const InvariantFormSpace& space);

/// {v : phi(v, s) = 0}. Throws if phi is degenerate.
Subspace orthogonal_complement(const BilinearForm& phi, const Subspace& s);

/// The map Delta(b): x -> b(x, .) in dual coordinates, with the module-map
/// identity psi([x,y]) = -psi(y) ad x checked on all basis pairs.
struct DualModuleMap {
  Matrix matrix;        // column i = coordinates of b(e_i, .) in the dual basis
  bool bijective = false;
  bool module_map_ok = false;
};
/// Throws if b is not invariant.
DualModuleMap delta_map(const LieAlgebra& g, const BilinearForm& b);

/// Gram matrix of the Killing form kappa(x, y) = tr(ad x ad y).
BilinearForm killing_form(const LieAlgebra& g);

/// Cartan's criterion: det kappa != 0 (true for the zero algebra).
bool is_semisimple(const LieAlgebra& g);

/// g = Z(g) + g^2 as a direct sum with g^2 semisimple.
bool is_reductive(const LieAlgebra& g);

}  // namespace quadlie

#endif  // QUADLIE_FORMS_HPP
