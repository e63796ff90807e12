#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "antiflag/dsrg.hpp"
#include "antiflag/error.hpp"
#include "antiflag/incidence.hpp"
#include "antiflag/io.hpp"
#include "antiflag/iso.hpp"
#include "support.hpp"

using namespace antiflag;

namespace {

VertexMapping random_permutation(int n, std::mt19937& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return VertexMapping(perm);
}

struct FixtureGraphs {
  IncidenceStructure s1 = build_gdd(2, 3);
  Digraph d1 = build_antiflag_forward(s1);
  IncidenceStructure s2 = support::grid_two_pencils();
  Digraph d2 = build_antiflag_backward(s2);
};

}  // namespace

TEST(VertexMapping, RejectsNonPermutations) {
  EXPECT_THROW(VertexMapping({0, 0}), Error);
  EXPECT_THROW(VertexMapping({0, 2}), Error);
  EXPECT_THROW(VertexMapping({-1, 0}), Error);
  EXPECT_EQ(VertexMapping::identity(3).perm(), (std::vector<int>{0, 1, 2}));
}

TEST(VerifyMapping, FixtureTablePasses) {
  const FixtureGraphs g;
  const auto rows = parse_mapping_table(read_file(support::data_path("k33_grid_isomorphism.txt")));
  ASSERT_EQ(rows.size(), 36U);
  const auto f = support::fixture_mapping(rows, g.d1, g.s1, g.d2, g.s2);
  EXPECT_TRUE(verify_mapping(g.d1, g.d2, f));
}

TEST(VerifyMapping, SwappingTwoImagesBreaksTheFixture) {
  const FixtureGraphs g;
  const auto rows = parse_mapping_table(read_file(support::data_path("k33_grid_isomorphism.txt")));
  auto perm = support::fixture_mapping(rows, g.d1, g.s1, g.d2, g.s2).perm();
  int broken = 0;
  for (std::size_t i = 0; i + 1 < perm.size(); ++i) {
    std::swap(perm[i], perm[i + 1]);
    broken += verify_mapping(g.d1, g.d2, VertexMapping(perm)) ? 0 : 1;
    std::swap(perm[i], perm[i + 1]);
  }
  EXPECT_EQ(broken, 35);
}

TEST(VerifyMapping, SizeMismatch) {
  try {
    verify_mapping(Digraph(3), Digraph(4), VertexMapping::identity(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeMismatch);
  }
}

TEST(AreIsomorphic, FindsTheFixtureIsomorphism) {
  const FixtureGraphs g;
  const auto r = are_isomorphic(g.d1, g.d2);
  ASSERT_EQ(r.outcome, IsoOutcome::Isomorphic);
  ASSERT_TRUE(r.mapping);
  EXPECT_TRUE(verify_mapping(g.d1, g.d2, *r.mapping));
}

TEST(AreIsomorphic, ForwardRuleOnTheGridIsADifferentDigraph) {
  // Same parameters (36,12,5,2,5), but the forward rule on the grid gives the
  // reverse of the backward digraph, which is not isomorphic to the K33 one.
  const FixtureGraphs g;
  const auto forward = build_antiflag_forward(g.s2);
  EXPECT_EQ(verify_dsrg(forward), verify_dsrg(g.d1));
  EXPECT_EQ(are_isomorphic(g.d1, forward).outcome, IsoOutcome::NotIsomorphic);
}

TEST(AreIsomorphic, ShuffledCopies) {
  std::mt19937 rng(5);
  for (const auto& s : {build_gdd(2, 2), build_fano(), build_affine_plane(3), build_partition_structure(2, 4)}) {
    const auto d = build_antiflag_forward(s);
    const auto f = random_permutation(d.size(), rng);
    const auto copy = relabel(d, f);
    EXPECT_TRUE(verify_mapping(d, copy, f));
    const auto r = are_isomorphic(d, copy);
    ASSERT_EQ(r.outcome, IsoOutcome::Isomorphic);
    EXPECT_TRUE(verify_mapping(d, copy, *r.mapping));
  }
}

TEST(AreIsomorphic, DifferentParametersOrSizes) {
  const auto partition = build_antiflag_forward(build_partition_structure(2, 3));
  const auto spiked = build_partition_spiked(build_partition_structure(2, 3));
  EXPECT_EQ(are_isomorphic(partition, spiked).outcome, IsoOutcome::NotIsomorphic);
  EXPECT_EQ(are_isomorphic(Digraph(3), Digraph(4)).outcome, IsoOutcome::NotIsomorphic);
  const auto fano = build_fano();
  EXPECT_EQ(are_isomorphic(build_antiflag_backward(fano), build_antiflag_backward_loopy(fano)).outcome,
            IsoOutcome::NotIsomorphic);
}

TEST(AreIsomorphic, TinyBudgetIsReported) {
  const FixtureGraphs g;
  const auto r = are_isomorphic(g.d1, g.d2, 1);
  EXPECT_EQ(r.outcome, IsoOutcome::BudgetExceeded);
  EXPECT_FALSE(r.mapping);
}

TEST(Refine, ReachesAnEquitableFixpoint) {
  std::mt19937 rng(9);
  for (const auto& s : {build_gdd(2, 3), build_fano(), build_partition_structure(3, 3)}) {
    const auto d = build_antiflag_forward(s);
    const auto colors = refine(d, Coloring(static_cast<std::size_t>(d.size()), 0));
    EXPECT_TRUE(is_equitable(d, colors));
    EXPECT_EQ(refine(d, colors), colors);
  }
  Digraph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  const auto colors = refine(path, {0, 0, 0});
  EXPECT_TRUE(is_equitable(path, colors));
  EXPECT_NE(colors[0], colors[1]);
  EXPECT_NE(colors[1], colors[2]);
  EXPECT_FALSE(is_equitable(path, {0, 0, 0}));
}

TEST(Refine, ColourNamesAreIsomorphismInvariant) {
  std::mt19937 rng(13);
  Digraph d(6);
  d.add_edge(0, 1);
  d.add_edge(1, 2);
  d.add_edge(2, 0);
  d.add_edge(3, 4);
  d.add_edge(0, 5);
  const auto f = random_permutation(6, rng);
  const auto c1 = refine(d, Coloring(6, 0));
  const auto c2 = refine(relabel(d, f), Coloring(6, 0));
  for (int u = 0; u < 6; ++u) EXPECT_EQ(c1[static_cast<std::size_t>(u)], c2[static_cast<std::size_t>(f(u))]);
}

TEST(CanonicalForm, EqualOnIsomorphicInputs) {
  std::mt19937 rng(17);
  for (const auto& s : {build_gdd(2, 2), build_partition_structure(1, 4), build_fano()}) {
    const auto d = build_antiflag_forward(s);
    const auto copy = relabel(d, random_permutation(d.size(), rng));
    const auto c1 = canonical_form(d);
    const auto c2 = canonical_form(copy);
    ASSERT_TRUE(c1);
    ASSERT_TRUE(c2);
    EXPECT_EQ(c1->adjacency, c2->adjacency);
    const auto relabelled = relabel(d, c1->labeling);
    std::string bits;
    for (int u = 0; u < relabelled.size(); ++u) {
      for (int v = 0; v < relabelled.size(); ++v) bits += relabelled.has_edge(u, v) ? '1' : '0';
    }
    EXPECT_EQ(bits, c1->adjacency);
  }
  const auto partition = canonical_form(build_antiflag_forward(build_partition_structure(2, 3)));
  const auto spiked = canonical_form(build_partition_spiked(build_partition_structure(2, 3)));
  ASSERT_TRUE(partition && spiked);
  EXPECT_NE(partition->adjacency, spiked->adjacency);
}

TEST(Relabel, MovesEdgesAndRejectsWrongSize) {
  Digraph d(3);
  d.add_edge(0, 1);
  const auto r = relabel(d, VertexMapping({2, 0, 1}));
  EXPECT_TRUE(r.has_edge(2, 0));
  EXPECT_EQ(r.edge_count(), 1U);
  EXPECT_THROW(relabel(d, VertexMapping::identity(2)), Error);
}
