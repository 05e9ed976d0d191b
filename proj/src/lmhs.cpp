#include "lmhslab/lmhs.hpp"

#include <algorithm>
#include <utility>

namespace lmhslab {

namespace {

// Least m with N^{m+1} B ⊆ A.
unsigned induced_index(const RatMatrix& n, const SubspaceBasis& a, const SubspaceBasis& b) {
  unsigned m = 0;
  SubspaceBasis img = apply(n, b);
  while (!a.contains(img)) {
    img = apply(n, img);
    ++m;
  }
  return m;
}

// Fills w[k - base] for k in [c-r-1, c+r] on the subquotient B/A.
void build(const RatMatrix& n, const SubspaceBasis& a, const SubspaceBasis& b, int c, int r, int base,
           std::vector<SubspaceBasis>& w) {
  const int m = static_cast<int>(induced_index(n, a, b));
  if (m > r) throw ArithmeticError("induced nilpotency index exceeds its bound");
  for (int k = c + m; k <= c + r; ++k) w[k - base] = b;
  for (int k = c - r - 1; k <= c - m - 1; ++k) w[k - base] = a;
  if (m == 0) return;
  const RatMatrix nm = n.pow(static_cast<unsigned>(m));
  SubspaceBasis upper = preimage(nm, a, b);
  SubspaceBasis lower = subspace_sum(a, apply(nm, b));
  build(n, lower, upper, c, m - 1, base, w);
}

}  // namespace

WeightFiltration::WeightFiltration(RatMatrix generator, int center, std::vector<SubspaceBasis> subspaces)
    : generator_(std::move(generator)), center_(center), subspaces_(std::move(subspaces)) {
  auto idx = nilpotency_index(generator_);
  if (!idx) throw ArithmeticError("weight filtration generator is not nilpotent");
  index_ = *idx;
  if (subspaces_.size() != 2 * index_ + 1) throw DimensionError("weight filtration has the wrong number of steps");
}

SubspaceBasis WeightFiltration::W(int k) const {
  if (k < lowest_weight()) return SubspaceBasis(ambient_dim());
  if (k > highest_weight()) return SubspaceBasis::full(ambient_dim());
  return subspaces_[static_cast<std::size_t>(k - lowest_weight())];
}

std::vector<int> WeightFiltration::weights() const {
  std::vector<int> out;
  for (int k = lowest_weight(); k <= highest_weight(); ++k) out.push_back(k);
  return out;
}

std::size_t WeightFiltration::graded_dim(int k) const { return W(k).dim() - W(k - 1).dim(); }

std::vector<std::size_t> WeightFiltration::graded_dims() const {
  std::vector<std::size_t> out;
  for (int k = lowest_weight(); k <= highest_weight(); ++k) out.push_back(graded_dim(k));
  return out;
}

FiltrationCheck check_weight_axioms(const RatMatrix& n, int center, int lowest,
                                    const std::vector<SubspaceBasis>& subspaces) {
  const std::size_t dim = n.rows();
  const int highest = lowest + static_cast<int>(subspaces.size()) - 1;
  auto W = [&](int k) {
    if (k < lowest) return SubspaceBasis(dim);
    if (k > highest) return SubspaceBasis::full(dim);
    return subspaces[static_cast<std::size_t>(k - lowest)];
  };
  FiltrationCheck out;
  out.nested = true;
  for (int k = lowest; k <= highest + 1; ++k)
    if (!W(k).contains(W(k - 1))) out.nested = false;

  out.lowers_by_two = true;
  for (int k = lowest; k <= highest + 2; ++k)
    if (!W(k - 2).contains(apply(n, W(k)))) out.lowers_by_two = false;

  // N^l : Gr_{c+l} -> Gr_{c-l}; its rank is dim(N^l W_{c+l} + W_{c-l-1}) - dim W_{c-l-1}.
  out.graded_isomorphisms = true;
  const int span = std::max(highest - center, center - lowest) + 1;
  RatMatrix power = RatMatrix::identity(dim);
  for (int l = 0; l <= span && out.nested && out.lowers_by_two; ++l) {
    const std::size_t src = W(center + l).dim() - W(center + l - 1).dim();
    const std::size_t dst = W(center - l).dim() - W(center - l - 1).dim();
    const SubspaceBasis below = W(center - l - 1);
    const std::size_t r = subspace_sum(apply(power, W(center + l)), below).dim() - below.dim();
    if (src != dst || r != src) out.graded_isomorphisms = false;
    power = power * n;
  }
  if (!out.nested || !out.lowers_by_two) out.graded_isomorphisms = false;
  return out;
}

FiltrationCheck check_weight_axioms(const WeightFiltration& w) {
  std::vector<SubspaceBasis> subs;
  for (int k = w.lowest_weight(); k <= w.highest_weight(); ++k) subs.push_back(w.W(k));
  return check_weight_axioms(w.generator(), w.center(), w.lowest_weight(), subs);
}

WeightFiltration weight_filtration(const NilpotentOperator& n, int center) {
  const std::size_t dim = n.dim();
  const int m = static_cast<int>(n.nilpotency_index());
  const int base = center - m - 1;
  std::vector<SubspaceBasis> w(static_cast<std::size_t>(2 * m + 2), SubspaceBasis(dim));
  build(n.matrix(), SubspaceBasis(dim), SubspaceBasis::full(dim), center, m, base, w);
  w.erase(w.begin());  // W_{center-m-1} = 0
  WeightFiltration out(n.matrix(), center, std::move(w));
  if (!check_weight_axioms(out).ok()) throw ArithmeticError("constructed weight filtration fails its axioms");
  return out;
}

std::string to_string(KulikovType t) {
  switch (t) {
    case KulikovType::I: return "I";
    case KulikovType::II: return "II";
    case KulikovType::III: return "III";
  }
  return "?";
}

KulikovType kulikov_classify(const NilpotentOperator& n) {
  if (n.nilpotency_index() == 0) return KulikovType::I;
  if (n.nilpotency_index() == 1) return KulikovType::II;
  return KulikovType::III;
}

LimitInvariants limiting_invariants(const WeightFiltration& filt, unsigned rho_initial, unsigned k) {
  if (filt.ambient_dim() != 22) throw PreconditionError("limiting invariants are tabulated for rank-22 K3 lattices only");
  LimitInvariants out;
  out.kulikov_type = kulikov_classify(NilpotentOperator(filt.generator()));
  if (out.kulikov_type == KulikovType::III)
    throw PreconditionError("limiting Hodge numbers for type III are not tabulated");
  const std::size_t r = rank(filt.generator());
  if (k != r) throw PreconditionError("jump k must equal rank N = " + std::to_string(r));
  out.hodge_lim = {1, 20, 1};
  out.rho_initial = rho_initial;
  out.jump = k;
  out.rho_limit = rho_initial + k;
  return out;
}

}  // namespace lmhslab
