#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "lmhslab/lattice.hpp"

namespace lmhslab::detail {

/// Bounded search for lattice vectors of prescribed norm inside the box
/// [-bound, bound]^rank, optionally constrained to the common kernel of a
/// few integer linear forms. Vectors are produced in search order
/// (search_order_less) by a depth-first walk over one 1-norm shell at a
/// time. Each summand of the lattice gets its own norm range; negative or
/// positive definite summands are additionally bounded by Schur complements
/// of the partially fixed coordinates.
class NormSearch {
 public:
  using Vec = std::vector<std::int64_t>;
  /// Return false to stop the walk.
  using Visitor = std::function<bool(const Vec&)>;

  NormSearch(const Lattice& lattice, std::int64_t bound);

  /// Visits every nonzero v with v.v == norm and form.v == 0 for each form,
  /// strictly after `after` in search order when it is non-null. Returns
  /// false when the visitor stopped the walk.
  bool visit(std::int64_t norm, const std::vector<Vec>& forms, const Vec* after, const Visitor& visitor) const;

  std::int64_t gram(std::size_t i, std::size_t j) const { return gram_[i * n_ + j]; }
  std::size_t rank() const { return n_; }

 private:
  struct Block {
    std::size_t start = 0;
    std::size_t end = 0;
    int definite = 0;  // -1 negative definite, +1 positive definite, 0 otherwise
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    // schur[p]: p x p integer matrix D_p * S_p for prefix length p (1 <= p < size).
    std::vector<std::vector<std::int64_t>> schur;
    std::vector<std::int64_t> schur_den;
  };
  struct Walk;

  bool descend(Walk& w, std::size_t i) const;

  std::size_t n_;
  std::int64_t bound_;
  std::vector<std::int64_t> gram_;
  std::vector<Block> blocks_;
  std::vector<std::size_t> block_of_;
  std::vector<std::int64_t> future_lo_;  // sum of block ranges strictly after block b
  std::vector<std::int64_t> future_hi_;
  std::vector<std::int64_t> tail_lo_;  // crude range of r^T A r over the rest of the block from i on
  std::vector<std::int64_t> tail_hi_;
};

}  // namespace lmhslab::detail
