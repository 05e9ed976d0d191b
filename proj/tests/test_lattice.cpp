#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "lmhslab/lattice.hpp"
#include "support/oracles.hpp"

using namespace lmhslab;

namespace {

std::vector<std::int64_t> coords_of(const LatticeVector& v) { return v.coords(); }

// Exhaustive grid enumeration, the slow way.
std::vector<std::vector<std::int64_t>> brute_norm_vectors(const Lattice& l, std::int64_t norm, std::int64_t b) {
  const std::size_t n = l.rank();
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> c(n, -b);
  while (true) {
    bool nonzero = false;
    for (auto x : c) nonzero |= x != 0;
    if (nonzero) {
      Integer s = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s += l.gram()(i, j) * c[i] * c[j];
      if (s == norm) out.push_back(c);
    }
    std::size_t i = 0;
    while (i < n && c[i] == b) c[i++] = -b;
    if (i == n) break;
    ++c[i];
  }
  return out;
}

// Largest pairwise-orthogonal subset, by plain Bron-Kerbosch.
std::size_t max_orthogonal_family(const std::vector<LatticeVector>& roots) {
  const std::size_t n = roots.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) adj[i][j] = i != j && inner(roots[i], roots[j]) == 0;
  std::size_t best = 0;
  std::function<void(std::size_t, std::vector<std::size_t>, std::vector<std::size_t>)> bk =
      [&](std::size_t size, std::vector<std::size_t> p, std::vector<std::size_t> x) {
        if (p.empty() && x.empty()) best = std::max(best, size);
        if (size + p.size() <= best) return;
        while (!p.empty()) {
          const std::size_t v = p.back();
          p.pop_back();
          std::vector<std::size_t> p2, x2;
          for (auto u : p)
            if (adj[v][u]) p2.push_back(u);
          for (auto u : x)
            if (adj[v][u]) x2.push_back(u);
          bk(size + 1, p2, x2);
          x.push_back(v);
        }
      };
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  bk(0, all, {});
  return best;
}

}  // namespace

TEST(Lattice, HyperbolicPlane) {
  const Lattice u = builtin("U");
  EXPECT_EQ(u.rank(), 2u);
  EXPECT_EQ(u.determinant(), -1);
  EXPECT_TRUE(u.is_even());
}

TEST(Lattice, K3) {
  const Lattice k3 = builtin(BuiltinLattice::K3);
  EXPECT_EQ(k3.rank(), 22u);
  EXPECT_EQ(k3.signature(), (Signature{3, 19, 0}));
  EXPECT_EQ(k3.determinant(), -1);
  EXPECT_TRUE(k3.is_even());
  EXPECT_EQ(k3.block_sizes(), (std::vector<std::size_t>{2, 2, 2, 8, 8}));
}

TEST(Lattice, PrintedLambdaHasRank19) {
  const Lattice l = builtin(BuiltinLattice::PAPER_LAMBDA);
  EXPECT_EQ(l.rank(), 19u);
  EXPECT_NE(l.rank(), builtin(BuiltinLattice::K3).rank());
}

TEST(Lattice, E8PlusU) {
  const Lattice l = direct_sum(builtin("E8m"), builtin("U"));
  EXPECT_EQ(l.rank(), 10u);
  EXPECT_EQ(l.determinant(), -1);
}

TEST(Lattice, E8IsUnimodularNegativeDefinite) {
  const Lattice e8 = builtin(BuiltinLattice::E8_MINUS);
  EXPECT_EQ(e8.determinant(), 1);
  EXPECT_EQ(e8.signature(), (Signature{0, 8, 0}));
}

TEST(Lattice, SpecParsing) {
  EXPECT_EQ(parse_lattice("U + E8m^2 + A1m").rank(), 19u);
  EXPECT_EQ(parse_lattice("U^3+E8m^2"), builtin("K3"));
  EXPECT_EQ(parse_lattice("<4>").gram()(0, 0), 4);
  EXPECT_THROW(parse_lattice("U+"), ParseError);
  EXPECT_THROW(parse_lattice("Q7"), ParseError);
  try {
    parse_lattice("U+E8m^");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
}

TEST(Lattice, IntVectorParsing) {
  EXPECT_EQ(parse_int_vector("1, -2,3"), (std::vector<std::int64_t>{1, -2, 3}));
  EXPECT_THROW(parse_int_vector("1,,2"), ParseError);
  EXPECT_THROW(parse_int_vector("1,a"), ParseError);
}

TEST(Lattice, VectorLengthMustMatch) {
  EXPECT_THROW(LatticeVector(builtin("U"), {1, 2, 3}), DimensionError);
}

TEST(Lattice, InnerAcrossLatticesThrows) {
  const LatticeVector a(builtin("U"), {1, 0});
  const LatticeVector b(builtin("A1m"), {1});
  EXPECT_THROW(inner(a, b), PreconditionError);
}

TEST(LatticeSearch, URootsBoundOne) {
  const auto v = enumerate_norm_vectors(builtin("U"), -2, 1);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0].coords(), (std::vector<std::int64_t>{1, -1}));
  EXPECT_EQ(v[1].coords(), (std::vector<std::int64_t>{-1, 1}));
}

TEST(LatticeSearch, E8RootsMatchWeylOrbit) {
  const Lattice e8 = builtin("E8m");
  const auto orbit = oracle::e8_roots_by_weyl_orbit(e8.gram());
  ASSERT_EQ(orbit.size(), 240u);
  for (std::int64_t b : {1, 2, 3, 6}) {
    std::set<std::vector<std::int64_t>> expect;
    for (const auto& r : orbit) {
      std::int64_t h = 0;
      for (auto x : r) h = std::max<std::int64_t>(h, x < 0 ? -x : x);
      if (h <= b) expect.insert(r);
    }
    std::set<std::vector<std::int64_t>> got;
    for (const auto& v : enumerate_norm_vectors(e8, -2, b)) got.insert(v.coords());
    EXPECT_EQ(got, expect) << "bound " << b;
  }
  // highest root has a coefficient 6 in this basis
  EXPECT_EQ(enumerate_norm_vectors(e8, -2, 2).size(), 148u);
  EXPECT_EQ(enumerate_norm_vectors(e8, -2, 6).size(), 240u);
}

TEST(LatticeSearch, SmallLatticesMatchBruteForce) {
  for (const char* spec : {"U", "U+A1m", "A1m^2+<4>", "U+<-4>", "U^2"}) {
    const Lattice l = parse_lattice(spec);
    for (std::int64_t norm : {-2, 0, 2, -4}) {
      for (std::int64_t b : {1, 2}) {
        std::vector<std::vector<std::int64_t>> got;
        for (const auto& v : enumerate_norm_vectors(l, norm, b)) got.push_back(v.coords());
        auto expect = brute_norm_vectors(l, norm, b);
        std::sort(expect.begin(), expect.end(), search_order_less);
        EXPECT_EQ(got, expect) << spec << " norm " << norm << " bound " << b;
      }
    }
  }
}

TEST(LatticeSearch, OrderIsGraded) {
  EXPECT_TRUE(search_order_less({1, 0}, {1, 1}));
  EXPECT_TRUE(search_order_less({1, 0}, {0, 1}));
  EXPECT_TRUE(search_order_less({0, 1}, {0, -1}));
  EXPECT_FALSE(search_order_less({0, 1}, {0, 1}));
}

TEST(LatticeSearch, LimitCapsResult) {
  EXPECT_EQ(enumerate_norm_vectors(builtin("E8m"), -2, 2, 10).size(), 10u);
}

TEST(LatticeSearch, OrthogonalRootsInE8) {
  // In the simple-root basis the largest orthogonal family among roots of
  // height <= 2 has 7 members (checked against a clique oracle below); a
  // full A1^8 frame first appears at height 4.
  const Lattice e8 = builtin("E8m");
  for (std::int64_t b : {2, 3, 4}) {
    const auto roots = enumerate_norm_vectors(e8, -2, b);
    const std::size_t best = max_orthogonal_family(roots);
    for (std::size_t k = 1; k <= 8; ++k) {
      const auto c = orthogonal_root_configuration(e8, k, b);
      EXPECT_EQ(c.has_value(), k <= best) << "k=" << k << " bound " << b;
      if (c) {
        EXPECT_EQ(gram_of(*c), IntMatrix::identity(k) * Integer(-2));
      }
    }
  }
  EXPECT_FALSE(orthogonal_root_configuration(e8, 8, 2).has_value());
  EXPECT_TRUE(orthogonal_root_configuration(e8, 8, 4).has_value());
}

TEST(LatticeSearch, NoTwoOrthogonalRootsInU) {
  EXPECT_FALSE(orthogonal_root_configuration(builtin("U"), 2, 3).has_value());
}

TEST(LatticeSearch, K3ConfigurationsAtBoundTwo) {
  const Lattice k3 = builtin("K3");
  for (std::size_t k = 1; k <= 10; ++k) {
    const auto c = orthogonal_root_configuration(k3, k, 2);
    ASSERT_TRUE(c.has_value()) << k;
    EXPECT_EQ(gram_of(*c), IntMatrix::identity(k) * Integer(-2));
  }
}

TEST(Lattice, Primitivity) {
  const Lattice u = builtin("U");
  EXPECT_FALSE(is_primitive_sublattice(u, {LatticeVector(u, {2, 0})}));
  EXPECT_TRUE(is_primitive_sublattice(u, {LatticeVector(u, {1, 0})}));
  const Lattice k3 = builtin("K3");
  std::vector<std::int64_t> root(22, 0);
  root[6] = 1;
  EXPECT_TRUE(is_primitive_sublattice(k3, {LatticeVector(k3, root)}));
  EXPECT_THROW(is_primitive_sublattice(u, {LatticeVector(u, {1, 0}), LatticeVector(u, {2, 0})}), PreconditionError);
}

TEST(LatticeProperty, InnerIsSymmetricAndBilinear) {
  oracle::Rng rng(21);
  const std::vector<Lattice> ls = {builtin("K3"), parse_lattice("U+E8m+A1m"), parse_lattice("<3>+<-5>+U")};
  for (int trial = 0; trial < 200; ++trial) {
    const Lattice& l = ls[static_cast<std::size_t>(trial) % ls.size()];
    auto rv = [&] {
      std::vector<std::int64_t> c(l.rank());
      for (auto& x : c) x = oracle::uniform(rng, -4, 4);
      return LatticeVector(l, c);
    };
    const auto a = rv(), b = rv(), c = rv();
    EXPECT_EQ(inner(a, b), inner(b, a));
    std::vector<std::int64_t> s(l.rank());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = a[i] + b[i];
    EXPECT_EQ(inner(LatticeVector(l, s), c), inner(a, c) + inner(b, c));
  }
}

TEST(LatticeProperty, DeterminantMultiplicative) {
  const std::vector<std::string> names = {"U", "E8m", "A1m", "DEG4", "K3", "PAPER_LAMBDA"};
  for (const auto& a : names)
    for (const auto& b : names) {
      const Lattice x = builtin(a), y = builtin(b);
      EXPECT_EQ(direct_sum(x, y).determinant(), x.determinant() * y.determinant()) << a << "+" << b;
    }
}

TEST(LatticeProperty, NormVectorsClosedUnderNegation) {
  for (const char* spec : {"U+A1m", "E8m", "U^2+<-4>"}) {
    const Lattice l = parse_lattice(spec);
    for (std::int64_t norm : {-2, 0, 4}) {
      std::set<std::vector<std::int64_t>> s;
      for (const auto& v : enumerate_norm_vectors(l, norm, 2)) s.insert(coords_of(v));
      for (const auto& v : s) {
        auto w = v;
        for (auto& x : w) x = -x;
        EXPECT_TRUE(s.count(w)) << spec;
      }
    }
  }
}

TEST(LatticeProperty, RootConfigurationsAreOrthogonal) {
  for (const char* spec : {"E8m", "U^2+E8m", "A1m^4", "K3"}) {
    const Lattice l = parse_lattice(spec);
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto c = orthogonal_root_configuration(l, k, 2);
      if (!c) continue;
      EXPECT_EQ(gram_of(*c), IntMatrix::identity(k) * Integer(-2)) << spec << " k=" << k;
    }
  }
}
