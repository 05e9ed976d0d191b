#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lmhslab/matrix.hpp"

namespace lmhslab {

/// A linear subspace of Q^n, stored as the nonzero rows of its reduced
/// row echelon form. Two SubspaceBasis values describe the same subspace
/// iff they compare equal.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(std::size_t ambient_dim = 0);

  /// Span of arbitrary (possibly dependent) vectors.
  static SubspaceBasis span(std::size_t ambient_dim, const std::vector<RatVector>& vectors);
  static SubspaceBasis full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }

  /// Canonical basis vectors (rows of the RREF).
  std::vector<RatVector> vectors() const;
  /// dim() x ambient_dim() matrix whose rows are the canonical basis.
  const RatMatrix& rows() const { return basis_; }
  /// ambient_dim() x dim() matrix whose columns are the canonical basis.
  RatMatrix columns() const { return basis_.transpose(); }

  bool contains(const RatVector& v) const;
  bool contains(const SubspaceBasis& other) const;

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const SubspaceBasis& a, const SubspaceBasis& b) { return !(a == b); }

 private:
  std::size_t ambient_;
  RatMatrix basis_;
};

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis subspace_intersection(const SubspaceBasis& a, const SubspaceBasis& b);
/// m(s) for a square or rectangular m acting on column vectors.
SubspaceBasis apply(const RatMatrix& m, const SubspaceBasis& s);
/// {v in within : m v in target}.
SubspaceBasis preimage(const RatMatrix& m, const SubspaceBasis& target, const SubspaceBasis& within);

/// Reduced row echelon form with leading ones; pivot columns reported in
/// increasing order when `pivots` is non-null.
RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);
SubspaceBasis kernel(const RatMatrix& m);
SubspaceBasis image(const RatMatrix& m);

/// One solution of m x = b, or nullopt when the system is inconsistent.
/// Throws DimensionError when b.size() != m.rows().
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

Rational determinant(const RatMatrix& m);
/// Fraction-free Bareiss elimination.
Integer determinant(const IntMatrix& m);

std::optional<RatMatrix> inverse(const RatMatrix& m);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Inertia of a symmetric matrix, by congruence diagonalisation over Q.
Signature signature(const RatMatrix& symmetric);

struct SmithForm {
  IntMatrix U;  ///< unimodular, rows x rows
  IntMatrix D;  ///< diagonal, d_i | d_{i+1}, d_i >= 0
  IntMatrix V;  ///< unimodular, cols x cols
  std::vector<Integer> diagonal() const;
};

/// U * m * V == D. Pivots on the entry of least nonzero absolute value in
/// the trailing submatrix, ties resolved in row-major order.
SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace lmhslab
