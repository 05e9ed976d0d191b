#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lmhslab/lattice.hpp"

namespace lmhslab {

inline constexpr unsigned kMaxPicardRank = 20;
inline constexpr unsigned kMaxNodeJump = 10;

enum class Recipe { A1_NODES, I1_COLLISION };
std::string to_string(Recipe r);

/// Node (d, rho) of the WPR graph; d is always 1 here.
struct WprNode {
  unsigned d = 1;
  unsigned rho = 1;
  std::string label() const;  // "(1,rho)"
  friend bool operator==(const WprNode&, const WprNode&) = default;
};

struct WprEdge {
  WprNode from;
  WprNode to;
  unsigned k = 1;
  Recipe recipe = Recipe::A1_NODES;
  /// Abstract (-2)-classes introduced by the step, e.g. "E_1".
  std::vector<std::string> exceptional_ledger;
};

/// A1_NODES when k <= 10 and either the edge starts at rho = 1 or it is a
/// unit step starting at rho <= 10; I1_COLLISION otherwise.
Recipe recipe_for(unsigned from_rho, unsigned k);

struct WprGraph {
  unsigned rho_max = 1;
  unsigned k_max = 1;
  std::vector<WprNode> nodes;
  std::vector<WprEdge> edges;  // by from.rho, then k
};

/// Throws PreconditionError unless 1 <= rho_max <= 20 and k_max >= 1.
WprGraph build_wpr_graph(unsigned rho_max, unsigned k_max);
std::string to_dot(const WprGraph& g);

struct PlanStep {
  WprEdge edge;
  std::optional<LatticeVector> cycle;
};

struct AttachmentReport {
  std::string lattice_label;
  std::int64_t height_bound = 0;
  std::size_t requested = 0;
  std::size_t attached = 0;
  bool complete = false;
  IntMatrix gram;  // attached x attached, -2 I when verified
  bool gram_verified = false;
};

struct DegenerationPlan {
  unsigned target_rank = kMaxPicardRank;
  unsigned m = 0;
  std::vector<PlanStep> steps;
  std::optional<AttachmentReport> attachment;
  unsigned final_rho() const { return steps.empty() ? target_rank : steps.back().edge.to.rho; }
};

/// 20 - r unit steps from rho = r up to rho = 20. Throws PreconditionError
/// unless 1 <= r <= 20.
DegenerationPlan plan_chain(unsigned target_rank);

/// Attaches pairwise orthogonal (-2)-vectors of `l` to the steps. When the
/// bounded search cannot supply all m, the largest attachable prefix is
/// kept and the report says so. Throws PreconditionError for odd lattices.
DegenerationPlan attach_cycles(const DegenerationPlan& plan, const Lattice& l, std::int64_t height_bound);

}  // namespace lmhslab
