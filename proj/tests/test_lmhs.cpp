#include <gtest/gtest.h>

#include "lmhslab/lmhs.hpp"
#include "support/oracles.hpp"

using namespace lmhslab;

namespace {

RatMatrix square_zero_rank_one(std::size_t d) {
  RatMatrix n(d, d);
  n(0, d - 1) = 1;
  return n;
}

}  // namespace

TEST(Lmhs, ShiftCenteredAtOne) {
  const NilpotentOperator n(RatMatrix{{0, 1}, {0, 0}});
  const auto w = weight_filtration(n, 1);
  const auto e1 = SubspaceBasis::span(2, {{Rational(1), Rational(0)}});
  EXPECT_EQ(w.W(0), e1);
  EXPECT_EQ(w.W(1), e1);
  EXPECT_EQ(w.W(2), SubspaceBasis::full(2));
  EXPECT_EQ(w.W(-1), SubspaceBasis(2));
  EXPECT_EQ(w.graded_dims(), (std::vector<std::size_t>{1, 0, 1}));
  EXPECT_EQ(w.weights(), (std::vector<int>{0, 1, 2}));
}

TEST(Lmhs, K3TypeTwo) {
  const NilpotentOperator n(square_zero_rank_one(22));
  const auto w = weight_filtration(n);
  EXPECT_EQ(w.weights(), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(w.graded_dims(), (std::vector<std::size_t>{1, 20, 1}));
  EXPECT_EQ(kulikov_classify(n), KulikovType::II);
  const auto inv = limiting_invariants(w, 1, 1);
  EXPECT_EQ(inv.hodge_lim, (std::array<unsigned, 3>{1, 20, 1}));
  EXPECT_EQ(inv.rho_initial, 1u);
  EXPECT_EQ(inv.rho_limit, 2u);
  EXPECT_EQ(inv.jump, 1u);
}

TEST(Lmhs, TypeOneIsTrivial) {
  const NilpotentOperator n(RatMatrix(22, 22));
  const auto w = weight_filtration(n);
  EXPECT_EQ(w.graded_dims(), (std::vector<std::size_t>{22}));
  EXPECT_EQ(kulikov_classify(n), KulikovType::I);
  const auto inv = limiting_invariants(w, 5, 0);
  EXPECT_EQ(inv.hodge_lim, (std::array<unsigned, 3>{1, 20, 1}));
  EXPECT_EQ(inv.rho_limit, 5u);
}

TEST(Lmhs, TypeThreeFromEichler) {
  const Lattice l = parse_lattice("U+A1m");
  const auto t = eichler_unipotent(l, LatticeVector(l, {1, 0, 0}), LatticeVector(l, {0, 0, 1}));
  const auto n = log_unipotent(t);
  EXPECT_EQ(kulikov_classify(n), KulikovType::III);
  const auto w = weight_filtration(n);
  EXPECT_EQ(w.graded_dims(), (std::vector<std::size_t>{1, 0, 1, 0, 1}));
}

TEST(Lmhs, LimitingInvariantsPreconditions) {
  const auto w = weight_filtration(NilpotentOperator(square_zero_rank_one(22)));
  EXPECT_THROW(limiting_invariants(w, 1, 2), PreconditionError);
  const auto small = weight_filtration(NilpotentOperator(square_zero_rank_one(4)));
  EXPECT_THROW(limiting_invariants(small, 1, 1), PreconditionError);
  RatMatrix n3(22, 22);
  n3(0, 1) = 1;
  n3(1, 2) = 1;
  EXPECT_THROW(limiting_invariants(weight_filtration(NilpotentOperator(n3)), 1, 2), PreconditionError);
}

TEST(Lmhs, AxiomCheckerRejectsWrongFiltration) {
  const RatMatrix n = square_zero_rank_one(3);
  // W_1 = 0, W_2 = everything violates the graded isomorphism at l = 1
  std::vector<SubspaceBasis> bad = {SubspaceBasis(3), SubspaceBasis::full(3), SubspaceBasis::full(3)};
  const auto c = check_weight_axioms(n, 2, 1, bad);
  EXPECT_FALSE(c.ok());
  EXPECT_TRUE(c.nested);
}

TEST(LmhsProperty, AxiomsAndUniqueness) {
  oracle::Rng rng(41);
  for (int trial = 0; trial < 80; ++trial) {
    const auto d = static_cast<std::size_t>(oracle::uniform(rng, 1, 7));
    const RatMatrix nm = oracle::random_nilpotent(rng, d);
    const int center = static_cast<int>(oracle::uniform(rng, 0, 3));
    const auto w = weight_filtration(NilpotentOperator(nm), center);
    EXPECT_TRUE(check_weight_axioms(w).ok());

    // symmetric graded dims summing to d
    const auto g = w.graded_dims();
    std::size_t total = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      total += g[i];
      EXPECT_EQ(g[i], g[g.size() - 1 - i]);
    }
    EXPECT_EQ(total, d);

    const auto o = oracle::all_weight_filtrations(nm, center);
    ASSERT_EQ(o.solutions, 1u) << "trial " << trial;
    for (int k = w.lowest_weight(); k <= w.highest_weight(); ++k)
      EXPECT_EQ(w.W(k), o.first[static_cast<std::size_t>(k - w.lowest_weight())]);
  }
}

TEST(LmhsProperty, GradedDimsFromJordanType) {
  // For a single Jordan block of size s the graded pieces are one-dimensional
  // at weights c-s+1, c-s+3, ..., c+s-1.
  for (std::size_t s = 1; s <= 7; ++s) {
    RatMatrix j(s, s);
    for (std::size_t i = 0; i + 1 < s; ++i) j(i, i + 1) = 1;
    const auto w = weight_filtration(NilpotentOperator(j), 0);
    for (int k = w.lowest_weight(); k <= w.highest_weight(); ++k)
      EXPECT_EQ(w.graded_dim(k), (k - w.lowest_weight()) % 2 == 0 ? 1u : 0u);
  }
}
