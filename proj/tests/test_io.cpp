#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "antiflag/dsrg.hpp"
#include "antiflag/error.hpp"
#include "antiflag/incidence.hpp"
#include "antiflag/io.hpp"
#include "support.hpp"

using namespace antiflag;

namespace {

std::size_t parse_error_line(void (*f)(std::string_view), std::string_view text) {
  try {
    f(text);
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::Parse);
    return e.line();
  }
  ADD_FAILURE() << "accepted: " << text;
  return 0;
}

void dgr(std::string_view t) { from_dgr(t); }
void edges(std::string_view t) { from_edge_list(t); }
void json(std::string_view t) { structure_from_json(t); }
void table(std::string_view t) { parse_mapping_table(t); }

}  // namespace

TEST(StructureJson, RoundTripIsBitExact) {
  for (const auto& s : {build_gdd(2, 3), build_affine_plane(3), build_fano(), build_partition_structure(2, 3),
                        build_hyperplane_design(2, 3)}) {
    const auto text = structure_to_json(s);
    const auto back = structure_from_json(text);
    EXPECT_EQ(back, s);
    EXPECT_EQ(structure_to_json(back), text);
    EXPECT_EQ(text.back(), '\n');
  }
}

TEST(StructureJson, Layout) {
  EXPECT_EQ(structure_to_json(IncidenceStructure(3, {{0, 1}, {2}})), "{\"points\":3,\"blocks\":[[0,1],[2]]}\n");
  const auto p = structure_to_json(build_partition_structure(1, 3));
  EXPECT_EQ(p, "{\"points\":3,\"blocks\":[[0],[1],[2]],\"groups\":[[0],[1],[2]],\"parallel_classes\":[[0,1,2]]}\n");
}

TEST(StructureJson, Errors) {
  EXPECT_EQ(parse_error_line(json, "{"), 1U);
  EXPECT_EQ(parse_error_line(json, "[]"), 1U);
  EXPECT_EQ(parse_error_line(json, "{\"points\":3}"), 1U);
  EXPECT_EQ(parse_error_line(json, "{\"points\":3,\"blocks\":[[0]],\"colour\":1}"), 1U);
  EXPECT_EQ(parse_error_line(json, "{\"points\":3,\"blocks\":[[0,\"a\"]]}"), 1U);
  try {
    structure_from_json("{\"points\":3,\"blocks\":[[0,5]]}");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidStructure);
  }
}

TEST(Dgr, RoundTripIsBitExact) {
  const auto d = build_antiflag_forward(build_gdd(2, 2));
  const auto text = to_dgr(d);
  EXPECT_EQ(text.substr(0, 2), "8\n");
  EXPECT_EQ(from_dgr(text), d);
  EXPECT_EQ(to_dgr(from_dgr(text)), text);
  EXPECT_EQ(parse_digraph(text), d);
}

TEST(Dgr, ParseErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line(dgr, ""), 1U);
  EXPECT_EQ(parse_error_line(dgr, "x\n"), 1U);
  EXPECT_EQ(parse_error_line(dgr, "2\n01\n"), 3U);
  EXPECT_EQ(parse_error_line(dgr, "2\n01\n1\n"), 3U);
  EXPECT_EQ(parse_error_line(dgr, "2\n01\n12\n"), 3U);
  EXPECT_EQ(parse_error_line(dgr, "2\n11\n00\n"), 2U);
  EXPECT_EQ(parse_error_line(dgr, "2\n01\n10\n01\n"), 4U);
}

TEST(EdgeList, RoundTripAndOrder) {
  Digraph d(4);
  d.add_edge(3, 0);
  d.add_edge(0, 2);
  d.add_edge(0, 1);
  EXPECT_EQ(to_edge_list(d), "0 1\n0 2\n3 0\n");
  EXPECT_EQ(from_edge_list(to_edge_list(d)), d);
  EXPECT_EQ(parse_digraph("0 1\n1 2\n2 0\n").size(), 3);
  const auto big = build_antiflag_forward(build_fano());
  EXPECT_EQ(from_edge_list(to_edge_list(big)), big);
}

TEST(EdgeList, ParseErrors) {
  EXPECT_EQ(parse_error_line(edges, ""), 1U);
  EXPECT_EQ(parse_error_line(edges, "0 1\n1\n"), 2U);
  EXPECT_EQ(parse_error_line(edges, "0 1\n2 2\n"), 2U);
  EXPECT_EQ(parse_error_line(edges, "0 -1\n"), 1U);
}

TEST(MappingTable, ParsesCellsAndSkipsComments) {
  const auto rows = parse_mapping_table("# comment\n\n1,24 ↔ 123,4 | 2,14 <-> 456,1\n");
  ASSERT_EQ(rows.size(), 2U);
  EXPECT_EQ(rows[0].from, (NamedAntiFlag{1, {2, 4}}));
  EXPECT_EQ(rows[0].to, (NamedAntiFlag{4, {1, 2, 3}}));
  EXPECT_EQ(rows[1].from, (NamedAntiFlag{2, {1, 4}}));
  EXPECT_EQ(rows[1].to, (NamedAntiFlag{1, {4, 5, 6}}));
}

TEST(MappingTable, ShippedFixtureHasEveryAntiFlagOnce) {
  const auto rows = parse_mapping_table(read_file(support::data_path("k33_grid_isomorphism.txt")));
  ASSERT_EQ(rows.size(), 36U);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      EXPECT_FALSE(rows[i].from == rows[j].from);
      EXPECT_FALSE(rows[i].to == rows[j].to);
    }
  }
}

TEST(MappingTable, ParseErrors) {
  EXPECT_EQ(parse_error_line(table, "# c\n1,24 123,4\n"), 2U);
  EXPECT_EQ(parse_error_line(table, "1,24 ↔ 1234\n"), 1U);
  EXPECT_EQ(parse_error_line(table, "\n\n1,24 ↔ 12,34\n"), 3U);
  EXPECT_EQ(parse_error_line(table, "1,2a ↔ 123,4\n"), 1U);
}

TEST(Files, ReadWriteRoundTrip) {
  const auto path = (std::filesystem::temp_directory_path() / "antiflag_io_test.txt").string();
  write_file(path, "hello\n");
  EXPECT_EQ(read_file(path), "hello\n");
  std::remove(path.c_str());
  EXPECT_THROW(read_file("/nonexistent/dir/file"), Error);
}
