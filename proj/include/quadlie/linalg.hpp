#ifndef QUADLIE_LINALG_HPP
#define QUADLIE_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "quadlie/matrix.hpp"

namespace quadlie {

struct EchelonForm {
  Matrix reduced;                    // unique reduced row-echelon form
  std::vector<std::size_t> pivots;   // pivot column per nonzero row
};

/// Reduced row-echelon form with pivot bookkeeping. Row space is preserved.
EchelonForm rref_with_pivots(Matrix m);
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);

Rational det(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// Subspace of K^n in canonical form: the basis rows form a reduced
/// row-echelon matrix, so two subspaces are equal iff their bases are.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Matrix basis_matrix() const { return Matrix::from_rows(basis_, ambient_); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Remainder of v after reduction against the basis (zero iff contained).
  Vec reduce(Vec v) const;
  /// Coefficients expressing v in the canonical basis, if v lies in the span.
  std::optional<Vec> coordinates(const Vec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

/// Kernel {v : m v = 0} in canonical form; dim = cols - rank.
Subspace null_space(const Matrix& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

/// One particular solution of A x = b, if the system is consistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

/// Incremental row-space accumulator: rows are inserted one at a time and
/// kept in echelon form, so huge equation systems never need to be stored.
class RowSpaceBuilder {
 public:
  explicit RowSpaceBuilder(std::size_t width) : width_(width) {}
  /// Returns true if the row enlarged the space.
  bool insert(Vec row);
  std::size_t rank() const { return rows_.size(); }
  std::size_t width() const { return width_; }
  /// Canonical kernel of the accumulated system (all inserted rows as equations).
  Subspace kernel() const;
  /// Canonical form of the accumulated row space.
  Subspace row_space() const;

 private:
  std::size_t width_;
  std::vector<Vec> rows_;               // echelon, sorted by pivot
  std::vector<std::size_t> pivots_;
};

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  friend bool operator==(const Signature& a, const Signature& b) {
    return a.positive == b.positive && a.negative == b.negative;
  }
};

struct CongruenceDiagonalization {
  std::vector<Rational> diagonal;  // entries of S^T g S
  Matrix transform;                // invertible S
  Signature signature;             // (#positive, #negative); rank = p + q
};

/// Diagonalizes a symmetric matrix by congruence (symmetric Gaussian
/// elimination with the row+column fix for zero pivots). Throws
/// std::invalid_argument if g is not symmetric.
CongruenceDiagonalization congruence_diagonalize(const Matrix& g);

}  // namespace quadlie

#endif  // QUADLIE_LINALG_HPP
