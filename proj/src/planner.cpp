#include "lmhslab/planner.hpp"

#include <sstream>

namespace lmhslab {

namespace {

std::vector<std::string> ledger(unsigned first, unsigned count) {
  std::vector<std::string> out;
  for (unsigned i = 0; i < count; ++i) out.push_back("E_" + std::to_string(first + i));
  return out;
}

bool is_minus_two_identity(const IntMatrix& g) {
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (g(i, j) != (i == j ? -2 : 0)) return false;
  return true;
}

}  // namespace

std::string to_string(Recipe r) { return r == Recipe::A1_NODES ? "A1_NODES" : "I1_COLLISION"; }

std::string WprNode::label() const { return "(" + std::to_string(d) + "," + std::to_string(rho) + ")"; }

Recipe recipe_for(unsigned from_rho, unsigned k) {
  if (k <= kMaxNodeJump && (from_rho == 1 || (k == 1 && from_rho <= kMaxNodeJump))) return Recipe::A1_NODES;
  return Recipe::I1_COLLISION;
}

WprGraph build_wpr_graph(unsigned rho_max, unsigned k_max) {
  if (rho_max < 1 || rho_max > kMaxPicardRank) throw PreconditionError("rho_max must lie in [1, 20]");
  if (k_max < 1) throw PreconditionError("k_max must be positive");
  WprGraph g;
  g.rho_max = rho_max;
  g.k_max = k_max;
  for (unsigned rho = 1; rho <= rho_max; ++rho) g.nodes.push_back({1, rho});
  for (unsigned rho = 1; rho <= rho_max; ++rho)
    for (unsigned k = 1; k <= k_max && rho + k <= rho_max; ++k)
      g.edges.push_back({{1, rho}, {1, rho + k}, k, recipe_for(rho, k), ledger(1, k)});
  return g;
}

std::string to_dot(const WprGraph& g) {
  std::ostringstream os;
  os << "digraph wpr {\n";
  for (const auto& n : g.nodes) os << "  \"" << n.label() << "\";\n";
  for (const auto& e : g.edges)
    os << "  \"" << e.from.label() << "\" -> \"" << e.to.label() << "\" [label=\"k=" << e.k
       << ",recipe=" << to_string(e.recipe) << "\"];\n";
  os << "}\n";
  return os.str();
}

DegenerationPlan plan_chain(unsigned target_rank) {
  if (target_rank < 1 || target_rank > kMaxPicardRank) throw PreconditionError("target rank must lie in [1, 20]");
  DegenerationPlan plan;
  plan.target_rank = target_rank;
  plan.m = kMaxPicardRank - target_rank;
  for (unsigned i = 0; i < plan.m; ++i) {
    const unsigned rho = target_rank + i;
    plan.steps.push_back({{{1, rho}, {1, rho + 1}, 1, recipe_for(rho, 1), ledger(i + 1, 1)}, std::nullopt});
  }
  return plan;
}

DegenerationPlan attach_cycles(const DegenerationPlan& plan, const Lattice& l, std::int64_t height_bound) {
  if (!l.is_even()) throw PreconditionError("attach_cycles needs an even lattice");
  if (height_bound < 1) throw PreconditionError("height bound must be at least 1");
  DegenerationPlan out = plan;
  AttachmentReport rep;
  rep.lattice_label = l.label();
  rep.height_bound = height_bound;
  rep.requested = plan.m;
  std::vector<LatticeVector> cycles;
  if (plan.m > 0) {
    if (auto found = orthogonal_root_configuration(l, plan.m, height_bound)) {
      cycles = std::move(*found);
    } else {
      // Existence is monotone in k, so bisect for the longest attachable prefix.
      std::size_t lo = 0;
      std::size_t hi = plan.m;  // hi is known to fail
      while (hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (auto f = orthogonal_root_configuration(l, mid, height_bound)) {
          lo = mid;
          cycles = std::move(*f);
        } else {
          hi = mid;
        }
      }
      if (lo > 0 && cycles.size() != lo) cycles = *orthogonal_root_configuration(l, lo, height_bound);
    }
  }
  rep.attached = cycles.size();
  rep.complete = rep.attached == rep.requested;
  rep.gram = gram_of(cycles);
  rep.gram_verified = is_minus_two_identity(rep.gram);
  if (!rep.gram_verified) throw ArithmeticError("attached cycles do not have Gram -2I");
  for (std::size_t i = 0; i < cycles.size(); ++i) out.steps[i].cycle = cycles[i];
  out.attachment = rep;
  return out;
}

}  // namespace lmhslab
