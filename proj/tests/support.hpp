#pragma once

// Helpers shared by the unit and acceptance tests for the shipped
// isomorphism fixture.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "antiflag/dsrg.hpp"
#include "antiflag/incidence.hpp"
#include "antiflag/io.hpp"
#include "antiflag/iso.hpp"

namespace support {

inline std::string data_path(const std::string& name) { return std::string(ANTIFLAG_DATA_DIR) + "/" + name; }

/// Two pencils of the order-3 affine plane on points 1..9 (stored 0..8) with
/// lines 123, 456, 789, 147, 258, 369, as in the fixture.
inline antiflag::IncidenceStructure grid_two_pencils() {
  return antiflag::IncidenceStructure(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6}, {1, 4, 7}, {2, 5, 8}});
}

/// Vertex of `d` (built from `s`) whose label is the named anti-flag, where
/// names are 1-based point numbers.
inline int vertex_of(const antiflag::Digraph& d, const antiflag::IncidenceStructure& s,
                     const antiflag::NamedAntiFlag& flag) {
  std::vector<int> block;
  for (int p : flag.block) block.push_back(p - 1);
  int block_index = -1;
  for (int b = 0; b < s.num_blocks(); ++b) {
    if (s.block(b) == block) block_index = b;
  }
  const antiflag::AntiFlag wanted{flag.point - 1, block_index};
  const auto& labels = d.vertex_labels();
  const auto it = std::find(labels.begin(), labels.end(), wanted);
  if (block_index < 0 || it == labels.end()) throw std::runtime_error("fixture names an unknown anti-flag");
  return static_cast<int>(it - labels.begin());
}

/// Vertex mapping described by the fixture rows from d1 (built on s1) to d2
/// (built on s2).
inline antiflag::VertexMapping fixture_mapping(const std::vector<antiflag::MappingRow>& rows,
                                               const antiflag::Digraph& d1, const antiflag::IncidenceStructure& s1,
                                               const antiflag::Digraph& d2, const antiflag::IncidenceStructure& s2) {
  std::vector<int> perm(static_cast<std::size_t>(d1.size()), -1);
  for (const auto& row : rows) {
    perm.at(static_cast<std::size_t>(vertex_of(d1, s1, row.from))) = vertex_of(d2, s2, row.to);
  }
  return antiflag::VertexMapping(std::move(perm));
}

}  // namespace support
