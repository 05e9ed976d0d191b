#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lmhslab/exactlin.hpp"

namespace lmhslab {

/// Free Z-module of finite rank with a symmetric integral Gram matrix.
///
/// Lattices assembled by direct_sum remember their block decomposition;
/// the vector searches use it to bound each summand independently.
/// Copies are cheap (shared immutable storage).
class Lattice {
 public:
  Lattice(IntMatrix gram, std::string label);
  Lattice(IntMatrix gram, std::string label, std::vector<std::size_t> block_sizes);

  std::size_t rank() const { return data_->gram.rows(); }
  const IntMatrix& gram() const { return data_->gram; }
  const std::string& label() const { return data_->label; }
  /// Sizes of the orthogonal summands, in coordinate order.
  const std::vector<std::size_t>& block_sizes() const { return data_->blocks; }
  bool is_even() const { return data_->even; }
  Integer determinant() const;
  Signature signature() const;

  /// Same Gram matrix (labels are presentation only).
  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.data_ == b.data_ || a.data_->gram == b.data_->gram;
  }
  friend bool operator!=(const Lattice& a, const Lattice& b) { return !(a == b); }

 private:
  struct Data {
    IntMatrix gram;
    std::string label;
    std::vector<std::size_t> blocks;
    bool even;
  };
  std::shared_ptr<const Data> data_;
};

/// Integer coordinate vector tied to a parent lattice.
class LatticeVector {
 public:
  LatticeVector(Lattice parent, std::vector<std::int64_t> coords);

  const Lattice& parent() const { return parent_; }
  const std::vector<std::int64_t>& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  IntVector to_integer() const;
  RatVector to_rational() const;
  std::string to_string() const;

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.coords_ == b.coords_ && a.parent_ == b.parent_;
  }

 private:
  Lattice parent_;
  std::vector<std::int64_t> coords_;
};

enum class BuiltinLattice { U, E8_MINUS, A1_MINUS, DEG4, K3, PAPER_LAMBDA };

/// Gram matrix of the negative E8 root lattice in the simple-root basis
/// (Bourbaki labelling: chain 1-3-4-5-6-7-8, node 2 attached to node 4).
IntMatrix e8_minus_gram();

Lattice builtin(BuiltinLattice which);
/// Accepts U, E8_MINUS, A1_MINUS, DEG4, K3, PAPER_LAMBDA and the short
/// aliases used in lattice spec strings (E8m, A1m). Throws PreconditionError.
Lattice builtin(std::string_view name);
/// Rank-one lattice <n>.
Lattice rank_one(std::int64_t n);
Lattice direct_sum(const Lattice& a, const Lattice& b);

/// Lattice spec grammar:
///
///   spec    := summand { '+' summand }
///   summand := atom [ '^' count ]
///   atom    := U | E8m | E8_MINUS | A1m | A1_MINUS | DEG4 | K3
///            | PAPER_LAMBDA | '<' integer '>'
///
/// Whitespace between tokens is ignored. Example: "U+E8m^2+A1m".
Lattice parse_lattice(std::string_view spec);

/// Comma-separated integers, e.g. "1,0,-1". Throws ParseError.
std::vector<std::int64_t> parse_int_vector(std::string_view text);

/// v^T G w. Throws PreconditionError if the parents differ.
Integer inner(const LatticeVector& v, const LatticeVector& w);

/// Candidate ordering used by every search: smaller coordinate 1-norm first,
/// then lexicographically larger first. Returns true when a precedes b.
bool search_order_less(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b);

/// All nonzero vectors with coordinates in [-height_bound, height_bound] and
/// v.v == norm, in search order. `limit` caps the result size (0 = no cap).
std::vector<LatticeVector> enumerate_norm_vectors(const Lattice& l, std::int64_t norm, std::int64_t height_bound,
                                                  std::size_t limit = 0);

/// First (in backtracking order over enumerate_norm_vectors(l, -2, bound))
/// family of k pairwise orthogonal (-2)-vectors, or nullopt.
std::optional<std::vector<LatticeVector>> orthogonal_root_configuration(const Lattice& l, std::size_t k,
                                                                        std::int64_t height_bound);

/// Unit elementary divisors of the coordinate matrix. Throws
/// PreconditionError when the vectors are linearly dependent.
bool is_primitive_sublattice(const Lattice& l, const std::vector<LatticeVector>& vectors);

/// Gram matrix of the given vectors.
IntMatrix gram_of(const std::vector<LatticeVector>& vectors);

}  // namespace lmhslab
