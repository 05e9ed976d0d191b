#include <gtest/gtest.h>

#include "lmhslab/claims.hpp"
#include "lmhslab/planner.hpp"

using namespace lmhslab;

TEST(Planner, RecipeRule) {
  EXPECT_EQ(recipe_for(1, 1), Recipe::A1_NODES);
  EXPECT_EQ(recipe_for(1, 10), Recipe::A1_NODES);
  EXPECT_EQ(recipe_for(1, 11), Recipe::I1_COLLISION);
  EXPECT_EQ(recipe_for(10, 1), Recipe::A1_NODES);
  EXPECT_EQ(recipe_for(11, 1), Recipe::I1_COLLISION);
  EXPECT_EQ(recipe_for(2, 2), Recipe::I1_COLLISION);
}

TEST(Planner, PathGraph) {
  const auto g = build_wpr_graph(20, 1);
  EXPECT_EQ(g.nodes.size(), 20u);
  ASSERT_EQ(g.edges.size(), 19u);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    EXPECT_EQ(g.edges[i].from.rho, i + 1);
    EXPECT_EQ(g.edges[i].to.rho, i + 2);
    EXPECT_EQ(g.edges[i].exceptional_ledger.size(), 1u);
  }
}

TEST(Planner, MultiStepEdgesAndDot) {
  const auto g = build_wpr_graph(3, 2);
  EXPECT_EQ(g.edges.size(), 3u);
  EXPECT_EQ(to_dot(g),
            "digraph wpr {\n"
            "  \"(1,1)\";\n"
            "  \"(1,2)\";\n"
            "  \"(1,3)\";\n"
            "  \"(1,1)\" -> \"(1,2)\" [label=\"k=1,recipe=A1_NODES\"];\n"
            "  \"(1,1)\" -> \"(1,3)\" [label=\"k=2,recipe=A1_NODES\"];\n"
            "  \"(1,2)\" -> \"(1,3)\" [label=\"k=1,recipe=A1_NODES\"];\n"
            "}\n");
  EXPECT_EQ(to_dot(g), to_dot(build_wpr_graph(3, 2)));
}

TEST(Planner, GraphPreconditions) {
  EXPECT_THROW(build_wpr_graph(0, 1), PreconditionError);
  EXPECT_THROW(build_wpr_graph(21, 1), PreconditionError);
  EXPECT_THROW(build_wpr_graph(5, 0), PreconditionError);
}

TEST(Planner, ChainArithmetic) {
  for (unsigned r = 1; r <= 20; ++r) {
    const auto p = plan_chain(r);
    EXPECT_EQ(p.m, 20 - r);
    EXPECT_EQ(p.steps.size(), 20 - r);
    EXPECT_EQ(p.final_rho(), 20u);
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
      EXPECT_EQ(p.steps[i].edge.k, 1u);
      EXPECT_EQ(p.steps[i].edge.from.rho, r + i);
    }
  }
  EXPECT_THROW(plan_chain(0), PreconditionError);
  EXPECT_THROW(plan_chain(21), PreconditionError);
}

TEST(Planner, RhoOneRecipes) {
  const auto p = plan_chain(1);
  for (std::size_t i = 0; i < p.steps.size(); ++i)
    EXPECT_EQ(p.steps[i].edge.recipe, i < 10 ? Recipe::A1_NODES : Recipe::I1_COLLISION) << i;
}

TEST(Planner, AttachEightOnK3) {
  const auto p = attach_cycles(plan_chain(12), builtin("K3"), 2);
  ASSERT_TRUE(p.attachment.has_value());
  EXPECT_TRUE(p.attachment->complete);
  EXPECT_EQ(p.attachment->attached, 8u);
  EXPECT_TRUE(p.attachment->gram_verified);
  EXPECT_EQ(p.attachment->gram, IntMatrix::identity(8) * Integer(-2));
  std::vector<LatticeVector> cycles;
  for (const auto& s : p.steps) {
    ASSERT_TRUE(s.cycle.has_value());
    cycles.push_back(*s.cycle);
  }
  EXPECT_EQ(gram_of(cycles), IntMatrix::identity(8) * Integer(-2));
}

TEST(Planner, AttachPartialWhenSearchRunsDry) {
  // U has no two orthogonal roots
  const auto p = attach_cycles(plan_chain(18), builtin("U"), 2);
  ASSERT_TRUE(p.attachment.has_value());
  EXPECT_FALSE(p.attachment->complete);
  EXPECT_EQ(p.attachment->attached, 1u);
  EXPECT_TRUE(p.steps[0].cycle.has_value());
  EXPECT_FALSE(p.steps[1].cycle.has_value());
}

TEST(Planner, AttachRejectsOddLattice) {
  EXPECT_THROW(attach_cycles(plan_chain(19), parse_lattice("<1>+<-1>"), 2), PreconditionError);
}

TEST(Claims, VerdictVector) {
  const auto recs = run_audit();
  const std::vector<std::pair<std::string, Verdict>> expect = {
      {"lambda-rank", Verdict::REFUTED},          {"reflection", Verdict::CONDITIONAL},
      {"n-squared", Verdict::REFUTED},            {"image-rank-one", Verdict::CONFIRMED},
      {"graded-dims", Verdict::REFUTED},          {"rho-limit", Verdict::CONFIRMED},
      {"rank-n-equals-k", Verdict::CONFIRMED},    {"picard-jump", Verdict::CONFIRMED},
      {"m-formula", Verdict::CONFIRMED},          {"node-localization", Verdict::CONDITIONAL},
      {"genericity", Verdict::UNVERIFIABLE},      {"principle", Verdict::UNVERIFIABLE},
      {"conjecture", Verdict::UNVERIFIABLE}};
  ASSERT_EQ(recs.size(), expect.size());
  for (std::size_t i = 0; i < recs.size(); ++i) {
    EXPECT_EQ(recs[i].id, expect[i].first);
    EXPECT_EQ(recs[i].verdict, expect[i].second) << recs[i].id;
  }
}

TEST(Claims, GradedDimsParts) {
  const auto recs = run_audit({{"graded-dims"}, false, 2});
  ASSERT_EQ(recs.size(), 1u);
  ASSERT_EQ(recs[0].parts.size(), 2u);
  EXPECT_EQ(recs[0].parts[0].verdict, Verdict::CONFIRMED);
  EXPECT_EQ(recs[0].parts[1].verdict, Verdict::REFUTED);
  EXPECT_NE(recs[0].parts[1].detail.find("20"), std::string::npos);
}

TEST(Claims, NSquaredEvidence) {
  const auto recs = run_audit({{"n-squared"}, false, 2});
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].verdict, Verdict::REFUTED);
  EXPECT_EQ(recs[0].evidence.at("square_factor"), "-2");
}

TEST(Claims, IsotropicCompanion) {
  const auto recs = run_audit({{}, true, 2});
  EXPECT_EQ(recs.size(), 14u);
  EXPECT_EQ(recs[3].id, "n-squared-isotropic");
  EXPECT_EQ(recs[3].verdict, Verdict::CONDITIONAL);
}

TEST(Claims, UnknownIdAndBadBound) {
  EXPECT_THROW(run_audit({{"nope"}, false, 2}), PreconditionError);
  EXPECT_THROW(run_audit({{}, false, 0}), PreconditionError);
}

TEST(Claims, SelectionKeepsCanonicalOrder) {
  const auto recs = run_audit({{"m-formula", "lambda-rank"}, false, 2});
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_EQ(recs[0].id, "lambda-rank");
  EXPECT_EQ(recs[1].id, "m-formula");
}

TEST(Claims, EvidenceReplays) {
  for (const auto& r : run_audit({{}, true, 2}))
    if (r.verdict == Verdict::CONFIRMED || r.verdict == Verdict::REFUTED) EXPECT_TRUE(replay(r)) << r.id;
}

TEST(Claims, RenderingIsStable) {
  const auto a = run_audit();
  const auto b = run_audit();
  EXPECT_EQ(audit_to_json(a).dump(2), audit_to_json(b).dump(2));
  EXPECT_EQ(audit_to_text(a), audit_to_text(b));
}
