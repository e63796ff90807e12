#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "antiflag/digraph.hpp"
#include "antiflag/incidence.hpp"

namespace antiflag {

// Structure interchange:
//   {"points":v,"blocks":[[...],...],"groups":[[...]],"parallel_classes":[[...]]}
// with the optional keys omitted when absent. One line, trailing newline.
std::string structure_to_json(const IncidenceStructure& s);
/// Throws ParseError (line 1 for JSON syntax issues) or InvalidStructure.
IncidenceStructure structure_from_json(std::string_view text);

// "dgr/1": a line with n, then n lines of n characters '0'/'1'.
std::string to_dgr(const Digraph& d);
Digraph from_dgr(std::string_view text);

// Edge list: one "u v" line per edge, sorted by (u, v). The order is taken as
// one more than the largest vertex mentioned.
std::string to_edge_list(const Digraph& d);
Digraph from_edge_list(std::string_view text);

/// Picks dgr/1 when the first non-empty line holds a single integer, the
/// edge list otherwise.
Digraph parse_digraph(std::string_view text);

/// Anti-flag written with 1-based point names and the block as its point set.
struct NamedAntiFlag {
  int point;
  std::vector<int> block;
  bool operator==(const NamedAntiFlag&) const = default;
};

/// One cell "1,24 ↔ 123,4" of an isomorphism table. Each side is a point
/// token and a block token in either order; the block is the token with more
/// than one digit. Points are single digits 1-9. "<->" is accepted for "↔".
/// A line may hold several cells separated by '|'; blank lines and lines
/// starting with '#' are skipped.
struct MappingRow {
  NamedAntiFlag from;
  NamedAntiFlag to;
};
std::vector<MappingRow> parse_mapping_table(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace antiflag
