#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "fatlas/coloring.hpp"
#include "fatlas/random.hpp"
#include "oracles.hpp"

using namespace fatlas;

namespace {

Coloring singletons(int n) {
  std::vector<int> a(static_cast<std::size_t>(n));
  std::iota(a.begin(), a.end(), 0);
  return Coloring(a, n);
}

FatWitness accept(const Graph& g, const Coloring& c) {
  const FatVerdict v = validate_fat(g, c);
  EXPECT_TRUE(accepted(v)) << (accepted(v) ? "" : std::get<Rejection>(v).reason);
  return accepted(v) ? *witness_of(v) : FatWitness{};
}

}  // namespace

TEST(Coloring, RequiresSurjectiveAssignment) {
  EXPECT_THROW(Coloring({0, 2}, 3), Error);
  EXPECT_THROW(Coloring({0, 3}, 3), Error);
  EXPECT_THROW(Coloring({}, 1), Error);
  EXPECT_EQ(Coloring::from_assignment({1, 0, 1}).classes(), 2);
  EXPECT_EQ(Coloring({2, 0, 1, 2}, 3).canonical(), Coloring({0, 1, 2, 0}, 3));
}

TEST(Coloring, TriangleSingletons) {
  const FatWitness w = accept(complete(3), singletons(3));
  EXPECT_EQ(w.k, 3);
  EXPECT_EQ(w.alpha, make_rational(1, 2));
  EXPECT_EQ(w.beta, 0);
}

TEST(Coloring, CycleAlternating) {
  const FatWitness w = accept(cycle(6), Coloring({0, 1, 0, 1, 0, 1}, 2));
  EXPECT_EQ(w.alpha, 1);
  EXPECT_EQ(w.beta, 0);
}

TEST(Coloring, CycleBlocksRejectedAtVertexOne) {
  const FatVerdict v = validate_fat(cycle(6), Coloring({0, 0, 0, 1, 1, 1}, 2));
  ASSERT_FALSE(accepted(v));
  EXPECT_EQ(std::get<Rejection>(v).vertex, 1);
  EXPECT_EQ(std::get<Rejection>(v).color_class, 0);
}

TEST(Coloring, SixSixAndNineSingletons) {
  const Graph g = complete_multipartite(MultipartiteSpec({{6, 2}, {1, 9}}));
  std::vector<int> a(12, 0);
  a.insert(a.end(), 9, 1);
  const FatWitness w = accept(g, Coloring(a, 2));
  EXPECT_EQ(w.alpha, make_rational(3, 5));
  EXPECT_EQ(w.beta, make_rational(2, 5));
}

TEST(Coloring, TrivialOneClassAndEdgeless) {
  const FatWitness w = accept(cycle(5), Coloring::monochrome(5));
  EXPECT_EQ(w, (FatWitness{1, Rational(0), Rational(1)}));
  const FatWitness e = accept(edgeless(3), singletons(3));
  EXPECT_EQ(e, (FatWitness{3, Rational(0), Rational(1)}));
}

TEST(Coloring, LengthMismatch) { EXPECT_THROW(validate_fat(cycle(5), Coloring::monochrome(4)), Error); }

TEST(Coloring, InferAlpha) {
  EXPECT_EQ(infer_alpha(complete(4), singletons(4)), make_rational(1, 3));
  EXPECT_FALSE(infer_alpha(edgeless(3), singletons(3)).has_value());
  EXPECT_EQ(infer_alpha(cycle(6), Coloring({0, 1, 2, 0, 1, 2}, 3)), make_rational(1, 2));
  EXPECT_THROW(infer_alpha(cycle(4), Coloring::monochrome(4)), Error);
}

TEST(Coloring, MergeClasses) {
  const Coloring six = singletons(6);
  const Coloring pairs = merge_classes(six, {{0, 1}, {2, 3}, {4, 5}});
  EXPECT_EQ(accept(complete(6), pairs).alpha, make_rational(2, 5));
  EXPECT_EQ(merge_classes(six, {{0}, {1}, {2}, {3}, {4}, {5}}), six);
  EXPECT_FALSE(accepted(validate_fat(complete(6), merge_classes(six, {{0, 1}, {2, 3, 4, 5}}))));
  EXPECT_THROW(merge_classes(six, {{0, 1}, {1, 2, 3, 4, 5}}), Error);
  EXPECT_THROW(merge_classes(six, {{0, 1}, {2, 3, 4}}), Error);
}

TEST(Coloring, ClassHelpers) {
  const Coloring c({0, 0, 0, 1, 1, 1}, 2);
  EXPECT_TRUE(equal_class_sizes(c));
  EXPECT_FALSE(equal_class_sizes(Coloring({0, 0, 1}, 2)));
  EXPECT_EQ(class_members(c, 1), (VertexSet{3, 4, 5}));
  EXPECT_THROW(class_members(c, 2), Error);
}

TEST(Coloring, AgreesWithDefinitionOracle) {
  SplitMix64 rng(5);
  int accepted_count = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.uniform(2, 7);
    const Graph g = random_graph(n, rng.unit(), rng);
    oracle::for_each_partition(n, [&](const std::vector<int>& a, int k) {
      const Coloring c(a, k);
      const FatVerdict v = validate_fat(g, c);
      const auto expected = oracle::fat_alpha(g, a, k);
      ASSERT_EQ(accepted(v), expected.has_value());
      if (expected) {
        ++accepted_count;
        const FatWitness& w = *witness_of(v);
        EXPECT_EQ(w.alpha, k == 1 ? Rational(0) : *expected);
        EXPECT_EQ(w.beta, 1 - Rational(k - 1) * w.alpha);
      }
    });
  }
  EXPECT_GT(accepted_count, 40);
}

TEST(Coloring, WitnessIdentityOnNonIsolatedVertices) {
  SplitMix64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = rng.uniform(2, 6);
    const Graph g = random_graph(n, 0.7, rng);
    oracle::for_each_partition(n, [&](const std::vector<int>& a, int k) {
      const FatVerdict v = validate_fat(g, Coloring(a, k));
      if (!accepted(v)) return;
      const FatWitness& w = *witness_of(v);
      for (Vertex x = 0; x < n; ++x) {
        if (g.degree(x) == 0) continue;
        EXPECT_EQ(Rational(k - 1) * w.alpha * g.degree(x) + w.beta * g.degree(x), g.degree(x));
      }
    });
  }
}

TEST(Coloring, InvariantUnderRelabeling) {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.uniform(3, 8);
    const Graph g = random_graph(n, 0.6, rng);
    const Coloring c = random_coloring(n, 3, rng);
    const FatVerdict base = validate_fat(g, c);

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(rng.uniform(0, i))]);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    std::vector<int> moved(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) moved[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = (c[v] + 1) % c.classes();
    const FatVerdict permuted = validate_fat(Graph::from_edge_list(n, edges), Coloring(moved, c.classes()));

    ASSERT_EQ(accepted(base), accepted(permuted));
    if (accepted(base)) {
      EXPECT_EQ(witness_of(base)->alpha, witness_of(permuted)->alpha);
    }
  }
}
