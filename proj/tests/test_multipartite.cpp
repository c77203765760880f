#include <gtest/gtest.h>

#include <functional>

#include "fatlas/multipartite.hpp"
#include "fatlas/random.hpp"
#include "fatlas/search.hpp"

using namespace fatlas;

namespace {

/// Every multiset of part sizes summing to n, as a decreasing list.
void for_each_spec(int n, const std::function<void(const MultipartiteSpec&)>& visit) {
  std::vector<int> sizes;
  std::function<void(int, int)> rec = [&](int remaining, int largest) {
    if (remaining == 0) {
      visit(MultipartiteSpec::from_part_sizes(sizes));
      return;
    }
    for (int s = std::min(remaining, largest); s >= 1; --s) {
      sizes.push_back(s);
      rec(remaining - s, s);
      sizes.pop_back();
    }
  };
  rec(n, n);
}

void expect_construction_validates(const MultipartiteSpec& spec) {
  const ChromaticVerdict v = fat_chromatic_multipartite(spec);
  const FatVerdict verdict = validate_fat(complete_multipartite(spec), v.construction);
  ASSERT_TRUE(accepted(verdict)) << spec.to_string();
  EXPECT_EQ(witness_of(verdict)->k, v.chi_fat) << spec.to_string();
  EXPECT_EQ(witness_of(verdict)->alpha, v.predicted_alpha) << spec.to_string();
}

}  // namespace

TEST(Multipartite, TuranFormula) {
  EXPECT_EQ(fat_chromatic_turan(12, 4), 4);
  EXPECT_EQ(fat_chromatic_turan(6, 3), 3);
  EXPECT_EQ(fat_chromatic_turan(8, 2), 4);
  try {
    fat_chromatic_turan(7, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotRegularTuran);
  }
}

TEST(Multipartite, TuranFormulaMatchesBruteForce) {
  for (int n = 1; n <= 10; ++n) {
    for (int t = 1; t <= n; ++t) {
      if (n % t) continue;
      EXPECT_EQ(fat_chromatic_brute(turan(n, t)).chi_fat, fat_chromatic_turan(n, t)) << n << "," << t;
    }
  }
}

TEST(Multipartite, BipartiteCondition) {
  EXPECT_TRUE(bipartite_condition(6, 2, 1, 9));
  EXPECT_TRUE(bipartite_condition(5, 1, 3, 1));
  EXPECT_FALSE(bipartite_condition(4, 1, 3, 3));
  EXPECT_THROW(bipartite_condition(0, 1, 1, 1), Error);
  const auto found = enumerate_bipartite_solutions(8, 12);
  EXPECT_NE(std::find(found.begin(), found.end(), BipartiteSolution{6, 2, 1, 9}), found.end());
  for (const auto& s : found) EXPECT_TRUE(bipartite_condition(s.n1, s.theta1, s.n2, s.theta2));
}

TEST(Multipartite, ClosedFormExamples) {
  const ChromaticVerdict a = fat_chromatic_multipartite(MultipartiteSpec::parse("6,4,4,2"));
  EXPECT_EQ(a.chi_fat, 2);
  EXPECT_EQ(a.kind, MultipartiteCase::Gcd);
  EXPECT_EQ(a.predicted_alpha, make_rational(1, 2));

  const ChromaticVerdict b = fat_chromatic_multipartite(MultipartiteSpec({{6, 2}, {1, 9}}));
  EXPECT_EQ(b.chi_fat, 2);
  EXPECT_EQ(b.kind, MultipartiteCase::BipartiteCondition);
  EXPECT_EQ(b.predicted_alpha, make_rational(3, 5));

  const ChromaticVerdict c = fat_chromatic_multipartite(MultipartiteSpec::parse("4,3,3,3"));
  EXPECT_EQ(c.chi_fat, 1);
  EXPECT_EQ(c.kind, MultipartiteCase::Gcd);

  const ChromaticVerdict d = fat_chromatic_multipartite(MultipartiteSpec::parse("1,1,1"));
  EXPECT_EQ(d.chi_fat, 3);
  EXPECT_EQ(d.kind, MultipartiteCase::Turan);

  const ChromaticVerdict e = fat_chromatic_multipartite(MultipartiteSpec::parse("4"));
  EXPECT_EQ(e.chi_fat, 4);
  EXPECT_EQ(e.predicted_alpha, 0);

  for (const char* s : {"6,4,4,2", "4,3,3,3", "1,1,1", "4", "3,3,3,3", "2,2", "5,3", "9,6,3"}) {
    expect_construction_validates(MultipartiteSpec::parse(s));
  }
  expect_construction_validates(MultipartiteSpec({{6, 2}, {1, 9}}));
}

TEST(Multipartite, ConstructionsOnTuranTwelveFour) {
  const MultipartiteSpec spec = turan_spec(12, 4);
  const Graph g = turan(12, 4);
  const FatVerdict mono = validate_fat(g, construct_monochromatic(spec, 4));
  ASSERT_TRUE(accepted(mono));
  EXPECT_EQ(witness_of(mono)->alpha, make_rational(1, 3));
  EXPECT_EQ(monochromatic_alpha(spec, 4), make_rational(1, 3));
  const FatVerdict balanced = validate_fat(g, construct_balanced(spec, 3));
  ASSERT_TRUE(accepted(balanced));
  EXPECT_EQ(witness_of(balanced)->alpha, make_rational(1, 3));
  EXPECT_THROW(construct_balanced(spec, 2), Error);
  EXPECT_THROW(construct_monochromatic(spec, 3), Error);
  EXPECT_THROW(construct_monochromatic(MultipartiteSpec::parse("3,2"), 2), Error);
}

TEST(Multipartite, ConstructionsAlwaysValidate) {
  for (int n = 1; n <= 16; ++n) for_each_spec(n, expect_construction_validates);
}

TEST(Multipartite, ClosedFormMatchesBruteForceUpToTen) {
  int specs = 0;
  for (int n = 1; n <= 10; ++n) {
    for_each_spec(n, [&](const MultipartiteSpec& spec) {
      ++specs;
      EXPECT_EQ(fat_chromatic_brute(complete_multipartite(spec)).chi_fat, fat_chromatic_multipartite(spec).chi_fat)
          << spec.to_string();
    });
  }
  EXPECT_EQ(specs, 138);
}

TEST(Multipartite, ClosedFormMatchesBruteForceElevenAndTwelve) {
  for (int n = 11; n <= 12; ++n) {
    for_each_spec(n, [&](const MultipartiteSpec& spec) {
      EXPECT_EQ(fat_chromatic_brute(complete_multipartite(spec)).chi_fat, fat_chromatic_multipartite(spec).chi_fat)
          << spec.to_string();
    });
  }
}

TEST(Multipartite, ThirteenFourHasNoTwoColoring) {
  const Graph g = complete_multipartite(MultipartiteSpec::parse("4,3,3,3"));
  EXPECT_FALSE(first_fat_coloring(g, 2).has_value());
}

TEST(Multipartite, SpectrumTuranTwelveFour) {
  const MultipartiteSpectrum s = multipartite_spectrum_closed(turan_spec(12, 4));
  ASSERT_EQ(s.known.size(), 1u);
  EXPECT_EQ(s.known[0].value, make_rational(4, 3));
  EXPECT_EQ(s.known[0].multiplicity, 3);
  EXPECT_EQ(s.ones_multiplicity, 8);
  EXPECT_EQ(s.zero_multiplicity, 1);
  EXPECT_TRUE(s.x_values.empty());
  EXPECT_EQ(s.total_multiplicity(), 12);
  EXPECT_LE(s.max_known_deviation, 1e-10);
}

TEST(Multipartite, SpectrumSixFourFourTwo) {
  const MultipartiteSpectrum s = multipartite_spectrum_closed(MultipartiteSpec::parse("6,4,4,2"));
  ASSERT_EQ(s.known.size(), 1u);
  EXPECT_EQ(s.known[0].value, make_rational(16, 12));
  EXPECT_EQ(s.known[0].multiplicity, 1);
  EXPECT_EQ(s.ones_multiplicity, 12);
  ASSERT_EQ(s.x_values.size(), 2u);
  EXPECT_EQ(s.x_values[0].lower, make_rational(4, 3));
  EXPECT_EQ(s.x_values[0].upper, make_rational(8, 5));
  EXPECT_EQ(s.x_values[1].lower, make_rational(8, 7));
  EXPECT_EQ(s.x_values[1].upper, make_rational(4, 3));
  for (const auto& x : s.x_values) {
    EXPECT_GT(x.value, to_double(x.lower));
    EXPECT_LT(x.value, to_double(x.upper));
  }
  EXPECT_EQ(s.total_multiplicity(), 16);
}

TEST(Multipartite, SpectrumRejectsSinglePart) { EXPECT_THROW(multipartite_spectrum_closed(MultipartiteSpec::parse("3")), Error); }

TEST(Multipartite, SpectrumStructureOnRandomSpecs) {
  SplitMix64 rng(59);
  for (int trial = 0; trial < 30; ++trial) {
    const MultipartiteSpec spec = random_multipartite_spec(2, 20, 2, rng);
    const MultipartiteSpectrum s = multipartite_spectrum_closed(spec);
    EXPECT_EQ(s.total_multiplicity(), spec.order());
    EXPECT_LE(s.max_known_deviation, 1e-8);
    EXPECT_EQ(static_cast<int>(s.x_values.size()), static_cast<int>(spec.groups().size()) - 1);
    for (const auto& x : s.x_values) {
      EXPECT_GT(x.value, to_double(x.lower)) << spec.to_string();
      EXPECT_LT(x.value, to_double(x.upper)) << spec.to_string();
    }
  }
}

TEST(Multipartite, EigenspaceIndicators) {
  for (int n = 2; n <= 16; ++n) {
    for_each_spec(n, [&](const MultipartiteSpec& spec) {
      const Graph g = complete_multipartite(spec);
      const auto sizes = spec.part_sizes();
      for (int i = 0; i < spec.part_count(); ++i) {
        for (int j = i + 1; j < spec.part_count(); ++j) {
          if (sizes[static_cast<std::size_t>(i)] != sizes[static_cast<std::size_t>(j)]) continue;
          const double lambda = static_cast<double>(n) / (n - sizes[static_cast<std::size_t>(i)]);
          EXPECT_LE(eigen_residual(g, indicator_gij(g, i, j).values, lambda), 1e-10) << spec.to_string();
        }
      }
      const auto& labels = g.part_labels();
      for (Vertex v = 0; v < n; ++v) {
        for (Vertex w = v + 1; w < n; ++w) {
          if (labels[static_cast<std::size_t>(v)] != labels[static_cast<std::size_t>(w)]) continue;
          EXPECT_LE(eigen_residual(g, indicator_fvw(n, v, w).values, 1.0), 1e-10);
        }
      }
    });
  }
}

TEST(Multipartite, Recognition) {
  const Graph g = complete_multipartite(MultipartiteSpec::parse("2,3,1"));
  const auto r = recognize_multipartite(g);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->spec.to_string(), "3,2,1");
  // Relabel and recognize again.
  std::vector<Vertex> perm = {4, 0, 5, 2, 1, 3};
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  const Graph h = Graph::from_edge_list(6, edges);
  const auto rh = recognize_multipartite(h);
  ASSERT_TRUE(rh.has_value());
  EXPECT_EQ(rh->spec.to_string(), "3,2,1");
  const Graph realized = complete_multipartite(rh->spec);
  for (auto [u, v] : h.edges()) {
    EXPECT_TRUE(realized.adjacent(rh->to_layout[static_cast<std::size_t>(u)], rh->to_layout[static_cast<std::size_t>(v)]));
  }
  EXPECT_FALSE(recognize_multipartite(cycle(5)).has_value());
  EXPECT_TRUE(recognize_multipartite(cycle(4)).has_value());
  EXPECT_EQ(recognize_multipartite(edgeless(3))->spec.to_string(), "3");
}
