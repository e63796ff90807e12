#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "antiflag/error.hpp"
#include "antiflag/incidence.hpp"
#include "oracle.hpp"

using namespace antiflag;

namespace {

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

oracle::Blocks blocks_of(const IncidenceStructure& s) { return s.blocks(); }

}  // namespace

TEST(IncidenceStructure, RejectsMalformedInput) {
  EXPECT_EQ(code_of([] { IncidenceStructure(3, {{0, 3}}); }), ErrorCode::InvalidStructure);
  EXPECT_EQ(code_of([] { IncidenceStructure(3, {{1, 0}}); }), ErrorCode::InvalidStructure);
  EXPECT_EQ(code_of([] { IncidenceStructure(3, {{0, 0}}); }), ErrorCode::InvalidStructure);
  EXPECT_EQ(code_of([] { IncidenceStructure(3, {{}}); }), ErrorCode::InvalidStructure);
  EXPECT_EQ(code_of([] { IncidenceStructure(3, {{0, 1}, {0, 1}}); }), ErrorCode::InvalidStructure);
  // Groups must partition the points.
  EXPECT_EQ(code_of([] { IncidenceStructure(3, {{0, 1}}, Partition{{0}, {1}}); }),
            ErrorCode::InvalidStructure);
  EXPECT_EQ(code_of([] { IncidenceStructure(3, {{0, 1}}, Partition{{0, 1}, {1, 2}}); }),
            ErrorCode::InvalidStructure);
  // Parallel classes must partition the blocks into disjoint covers.
  EXPECT_EQ(code_of([] { IncidenceStructure(2, {{0}, {1}}, std::nullopt, Partition{{0}}); }),
            ErrorCode::InvalidStructure);
  EXPECT_EQ(code_of([] { IncidenceStructure(3, {{0, 1}, {2}}, std::nullopt, Partition{{0}, {1}}); }),
            ErrorCode::InvalidStructure);
  EXPECT_NO_THROW(IncidenceStructure(3, {{0, 1}, {2}}, std::nullopt, Partition{{0, 1}}));
}

TEST(BuildGdd, TwoGroupsOfThree) {
  const auto s = build_gdd(2, 3);
  EXPECT_EQ(s.num_points(), 6);
  ASSERT_TRUE(s.groups());
  EXPECT_EQ(*s.groups(), (Partition{{0, 1, 2}, {3, 4, 5}}));
  ASSERT_EQ(s.num_blocks(), 9);
  int b = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) EXPECT_EQ(s.block(b++), (Block{i, 3 + j}));
  }
  EXPECT_FALSE(s.parallel_classes());
}

TEST(BuildGdd, TwoByTwoIsCompleteBipartiteK22) {
  const auto s = build_gdd(2, 2);
  EXPECT_EQ(s.num_points(), 4);
  EXPECT_EQ(s.blocks(), (std::vector<Block>{{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
}

TEST(BuildGdd, CountsAndBudget) {
  EXPECT_EQ(build_gdd(3, 2).num_blocks(), 8);
  EXPECT_EQ(build_gdd(3, 2).num_points(), 6);
  EXPECT_EQ(build_gdd(4, 3).num_blocks(), 81);
  EXPECT_EQ(code_of([] { build_gdd(2, 100000); }), ErrorCode::OutOfBudget);
  EXPECT_EQ(code_of([] { build_gdd(3, 2, 7); }), ErrorCode::OutOfBudget);
  EXPECT_EQ(code_of([] { build_gdd(1, 2); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { build_gdd(2, 1); }), ErrorCode::InvalidArgument);
}

TEST(BuildGdd, BlocksAreLexicographicTransversals) {
  const auto s = build_gdd(3, 3);
  EXPECT_TRUE(std::is_sorted(s.blocks().begin(), s.blocks().end()));
  for (const auto& block : s.blocks()) {
    ASSERT_EQ(block.size(), 3U);
    for (int g = 0; g < 3; ++g) EXPECT_EQ(block[static_cast<std::size_t>(g)] / 3, g);
  }
}

TEST(BuildAffinePlane, OrderThree) {
  const auto s = build_affine_plane(3);
  EXPECT_EQ(s.num_points(), 9);
  EXPECT_EQ(s.num_blocks(), 12);
  ASSERT_TRUE(s.parallel_classes());
  EXPECT_EQ(s.parallel_classes()->size(), 4U);
  for (const auto& cls : *s.parallel_classes()) EXPECT_EQ(cls.size(), 3U);
  // Slope 0 first: y = b, i.e. points x*3 + b.
  EXPECT_EQ(s.block(0), (Block{0, 3, 6}));
  // Verticals last: x = c.
  EXPECT_EQ(s.block(9), (Block{0, 1, 2}));
  EXPECT_EQ(s.block(11), (Block{6, 7, 8}));
}

TEST(BuildAffinePlane, OrderTwoHasEveryPair) {
  const auto s = build_affine_plane(2);
  EXPECT_EQ(s.num_points(), 4);
  EXPECT_EQ(s.num_blocks(), 6);
  EXPECT_EQ(s.parallel_classes()->size(), 3U);
  auto blocks = s.blocks();
  std::sort(blocks.begin(), blocks.end());
  EXPECT_EQ(blocks, (std::vector<Block>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
}

TEST(BuildAffinePlane, PairsOnExactlyOneLine) {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const auto s = build_affine_plane(q);
    const auto blocks = blocks_of(s);
    for (int x = 0; x < s.num_points(); ++x) {
      for (int y = x + 1; y < s.num_points(); ++y) ASSERT_EQ(oracle::common_blocks(blocks, x, y), 1) << q;
    }
  }
  EXPECT_EQ(code_of([] { build_affine_plane(6); }), ErrorCode::NotPrimePower);
}

TEST(BuildHyperplaneDesign, BinaryCube) {
  const auto s = build_hyperplane_design(2, 3);
  EXPECT_EQ(s.num_points(), 8);
  EXPECT_EQ(s.num_blocks(), 14);
  ASSERT_TRUE(s.parallel_classes());
  EXPECT_EQ(s.parallel_classes()->size(), 7U);
  const auto& classes = *s.parallel_classes();
  for (std::size_t a = 0; a < classes.size(); ++a) {
    for (std::size_t b = a + 1; b < classes.size(); ++b) {
      for (int x : classes[a]) {
        for (int y : classes[b]) EXPECT_EQ(oracle::meet(s.block(x), s.block(y)), 2);
      }
    }
  }
}

TEST(BuildHyperplaneDesign, PlaneMatchesAffinePlaneIncidences) {
  const auto h = build_hyperplane_design(3, 2);
  const auto a = build_affine_plane(3);
  auto hb = h.blocks();
  auto ab = a.blocks();
  std::sort(hb.begin(), hb.end());
  std::sort(ab.begin(), ab.end());
  EXPECT_EQ(hb, ab);
}

TEST(BuildHyperplaneDesign, ClassCountsAndErrors) {
  for (auto [q, n] : {std::pair{2, 2}, {2, 4}, {3, 3}, {4, 2}, {5, 2}}) {
    const auto s = build_hyperplane_design(q, n);
    int qn = 1;
    for (int i = 0; i < n; ++i) qn *= q;
    EXPECT_EQ(static_cast<int>(s.parallel_classes()->size()), (qn - 1) / (q - 1));
    const auto p = verify_2design(s);
    EXPECT_EQ(p.s, q);
    EXPECT_EQ(p.m, qn / (q * q));
  }
  EXPECT_EQ(code_of([] { build_hyperplane_design(6, 2); }), ErrorCode::NotPrimePower);
  EXPECT_EQ(code_of([] { build_hyperplane_design(2, 20); }), ErrorCode::OutOfBudget);
}

TEST(RestrictParallelClasses, Examples) {
  const auto ap = build_affine_plane(3);
  const auto two = restrict_parallel_classes(ap, 2);
  EXPECT_EQ(two.num_points(), 9);
  EXPECT_EQ(two.num_blocks(), 6);
  EXPECT_EQ(two.parallel_classes()->size(), 2U);
  EXPECT_EQ(restrict_parallel_classes(ap, 4).blocks(), ap.blocks());
  const auto h = restrict_parallel_classes(build_hyperplane_design(2, 3), 2);
  EXPECT_EQ(h.num_points(), 8);
  EXPECT_EQ(h.num_blocks(), 4);
}

TEST(RestrictParallelClasses, Errors) {
  EXPECT_EQ(code_of([] { restrict_parallel_classes(build_gdd(2, 2), 1); }), ErrorCode::NoParallelClasses);
  EXPECT_EQ(code_of([] { restrict_parallel_classes(build_affine_plane(3), 5); }), ErrorCode::BadL);
  EXPECT_EQ(code_of([] { restrict_parallel_classes(build_affine_plane(3), 0); }), ErrorCode::BadL);
}

TEST(BuildPartitionStructure, Examples) {
  const auto s = build_partition_structure(2, 3);
  EXPECT_EQ(s.num_points(), 6);
  EXPECT_EQ(s.blocks(), (std::vector<Block>{{0, 1}, {2, 3}, {4, 5}}));
  EXPECT_EQ(*s.groups(), (Partition{{0, 1}, {2, 3}, {4, 5}}));
  EXPECT_EQ(*s.parallel_classes(), (Partition{{0, 1, 2}}));
  const auto singletons = build_partition_structure(1, 4);
  EXPECT_EQ(singletons.num_points(), 4);
  EXPECT_EQ(singletons.num_blocks(), 4);
  EXPECT_EQ(build_partition_structure(3, 3).num_points(), 9);
  EXPECT_EQ(build_partition_structure(3, 3).num_blocks(), 3);
}

TEST(BuildFano, DifferenceSetDesign) {
  const auto s = build_fano();
  EXPECT_EQ(s.num_points(), 7);
  EXPECT_EQ(s.block(0), (Block{0, 1, 3}));
  EXPECT_EQ(s.block(6), (Block{0, 2, 6}));
  const auto p = verify_2design(s);
  EXPECT_EQ(p, (DesignParams{7, 7, 3, 3, 1, std::nullopt, std::nullopt}));
  EXPECT_GT(p.b + p.lambda, 2 * p.r);
  EXPECT_EQ(oracle::design_params(7, s.blocks()), (std::array<int, 5>{7, 7, 3, 3, 1}));
}

TEST(VerifyPg, AffinePencils) {
  const auto ap = build_affine_plane(3);
  EXPECT_EQ(verify_pg(restrict_parallel_classes(ap, 2)), (PgParams{3, 2, 1}));
  EXPECT_EQ(verify_pg(restrict_parallel_classes(ap, 3)), (PgParams{3, 3, 2}));
  for (int q : {2, 3, 4, 5}) {
    const auto plane = build_affine_plane(q);
    for (int l = 2; l <= q + 1; ++l) {
      const auto s = restrict_parallel_classes(plane, l);
      EXPECT_EQ(verify_pg(s), (PgParams{q, l, l - 1}));
      EXPECT_EQ(oracle::pg_params(s.num_points(), s.blocks()), (std::array<int, 3>{q, l, l - 1}));
    }
  }
}

TEST(VerifyPg, PartitionFailsAxiomOne) {
  try {
    verify_pg(build_partition_structure(2, 3));
    FAIL();
  } catch (const NotPgError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPg);
    EXPECT_EQ(e.axiom(), 1);
  }
}

TEST(VerifyPg, AxiomWitnesses) {
  // Line sizes differ: axiom 1, witness is the first deviating line.
  try {
    verify_pg(IncidenceStructure(4, {{0, 1}, {0, 1, 2}}));
    FAIL();
  } catch (const NotPgError& e) {
    EXPECT_EQ(e.axiom(), 1);
    ASSERT_EQ(e.witness().size(), 1U);
    EXPECT_EQ(e.witness()[0], 1);
  }
  // Constant sizes and replication but a pair on two lines: axiom 2.
  try {
    verify_pg(IncidenceStructure(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));
    FAIL();
  } catch (const NotPgError& e) {
    EXPECT_EQ(e.axiom(), 2);
    ASSERT_EQ(e.witness().size(), 2U);
    EXPECT_EQ(e.witness()[0], 0);
    EXPECT_EQ(e.witness()[1], 1);
  }
  // Two disjoint triangles: axioms 1 and 2 hold, but an anti-flag across
  // the triangles sees no line: axiom 3.
  try {
    verify_pg(IncidenceStructure(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}));
    FAIL();
  } catch (const NotPgError& e) {
    EXPECT_EQ(e.axiom(), 3);
  }
}

TEST(VerifyGdd, Examples) {
  EXPECT_EQ(verify_gdd(build_gdd(2, 3)), (GddParams{2, 3, 1}));
  EXPECT_EQ(verify_gdd(build_gdd(3, 2)), (GddParams{3, 2, 2}));
  for (int l = 2; l <= 4; ++l) {
    for (int q = 2; q <= 3; ++q) {
      int index = 1;
      for (int i = 0; i < l - 2; ++i) index *= q;
      EXPECT_EQ(verify_gdd(build_gdd(l, q)).pair_index, index);
    }
  }
  EXPECT_EQ(code_of([] { verify_gdd(build_partition_structure(2, 3)); }), ErrorCode::NotGdd);
  EXPECT_EQ(code_of([] { verify_gdd(build_affine_plane(2)); }), ErrorCode::PreconditionFailed);
}

TEST(Verify2Design, Examples) {
  EXPECT_EQ(verify_2design(build_affine_plane(3)), (DesignParams{9, 12, 3, 4, 1, 3, 1}));
  EXPECT_EQ(verify_2design(build_hyperplane_design(2, 3)), (DesignParams{8, 14, 4, 7, 3, 2, 2}));
  EXPECT_EQ(code_of([] { verify_2design(build_gdd(2, 2)); }), ErrorCode::NotDesign);
  // Truncated designs keep their classes but lose constant pair counts.
  EXPECT_EQ(code_of([] { verify_2design(restrict_parallel_classes(build_affine_plane(3), 2)); }),
            ErrorCode::NotDesign);
}

TEST(Verify2Design, NoClassesMeansNoResolutionData) {
  const auto p = verify_2design(build_fano());
  EXPECT_FALSE(p.s);
  EXPECT_FALSE(p.m);
}

TEST(AntiFlags, CountsAndOrder) {
  EXPECT_EQ(anti_flags(build_gdd(2, 2)).size(), 8U);
  EXPECT_EQ(anti_flags(build_affine_plane(2)).size(), 12U);
  EXPECT_TRUE(anti_flags(IncidenceStructure(3, {{0, 1, 2}})).empty());
  const auto s = build_affine_plane(3);
  const auto flags = anti_flags(s);
  EXPECT_TRUE(std::is_sorted(flags.begin(), flags.end()));
  std::size_t expected = 0;
  for (const auto& b : s.blocks()) expected += static_cast<std::size_t>(s.num_points()) - b.size();
  EXPECT_EQ(flags.size(), expected);
  for (const auto& f : flags) EXPECT_FALSE(s.incident(f.point, f.block));
}

TEST(Determinism, IdenticalInputsGiveIdenticalStructures) {
  EXPECT_EQ(build_gdd(3, 3), build_gdd(3, 3));
  EXPECT_EQ(build_affine_plane(5), build_affine_plane(5));
  EXPECT_EQ(build_hyperplane_design(3, 3), build_hyperplane_design(3, 3));
}
