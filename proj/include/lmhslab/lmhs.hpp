#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "lmhslab/exactlin.hpp"
#include "lmhslab/monodromy.hpp"

namespace lmhslab {

/// Increasing filtration W_{center-m} ⊆ ... ⊆ W_{center+m} of Q^n by a
/// nilpotent N of index m. W_k is zero below the range and the whole space
/// above it.
class WeightFiltration {
 public:
  WeightFiltration(RatMatrix generator, int center, std::vector<SubspaceBasis> subspaces);

  int center() const { return center_; }
  /// Nilpotency index m of the generating operator.
  unsigned index() const { return index_; }
  int lowest_weight() const { return center_ - static_cast<int>(index_); }
  int highest_weight() const { return center_ + static_cast<int>(index_); }
  std::size_t ambient_dim() const { return generator_.rows(); }
  const RatMatrix& generator() const { return generator_; }

  /// W_k for any integer k.
  SubspaceBasis W(int k) const;
  /// lowest_weight() .. highest_weight().
  std::vector<int> weights() const;
  /// dim Gr_k = dim W_k - dim W_{k-1}, aligned with weights().
  std::vector<std::size_t> graded_dims() const;
  /// dim Gr_k for any k.
  std::size_t graded_dim(int k) const;

 private:
  RatMatrix generator_;
  int center_;
  unsigned index_;
  std::vector<SubspaceBasis> subspaces_;  // W_{lowest} .. W_{highest}
};

struct FiltrationCheck {
  bool nested = false;
  bool lowers_by_two = false;  // N W_k ⊆ W_{k-2}
  bool graded_isomorphisms = false;
  bool ok() const { return nested && lowers_by_two && graded_isomorphisms; }
};

/// Both weight axioms for an arbitrary candidate: `subspaces` lists W_lowest,
/// W_lowest+1, ... with zero below and the full space above.
FiltrationCheck check_weight_axioms(const RatMatrix& n, int center, int lowest,
                                    const std::vector<SubspaceBasis>& subspaces);
FiltrationCheck check_weight_axioms(const WeightFiltration& w);

/// Inductive construction on subquotients. The result is re-checked
/// against both axioms; ArithmeticError if that ever fails.
WeightFiltration weight_filtration(const NilpotentOperator& n, int center = 2);

enum class KulikovType { I, II, III };
std::string to_string(KulikovType t);

/// I: N = 0. II: N != 0, N^2 = 0. III: N^2 != 0.
KulikovType kulikov_classify(const NilpotentOperator& n);

struct LimitInvariants {
  KulikovType kulikov_type = KulikovType::I;
  std::array<unsigned, 3> hodge_lim{};  // h^{2,0}, h^{1,1}, h^{0,2}
  unsigned rho_initial = 0;
  unsigned rho_limit = 0;
  unsigned jump = 0;
};

/// K3 bookkeeping: needs a 22-dimensional ambient space and k = rank N.
/// Type III has no tabulated Hodge numbers and raises PreconditionError.
LimitInvariants limiting_invariants(const WeightFiltration& filt, unsigned rho_initial, unsigned k);

}  // namespace lmhslab
