#include "antiflag/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "antiflag/error.hpp"
#include "json.hpp"

namespace antiflag {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

int parse_int(std::string_view token, std::size_t line) {
  if (token.empty() || token.size() > 9 ||
      !std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return std::stoi(std::string(token));
}

Json int_lists(const Partition& lists) {
  Json out = Json::array();
  for (const auto& list : lists) out.push_back(list);
  return out;
}

Partition read_lists(const Json& j, const char* key) {
  if (!j.is_array()) throw ParseError(1, std::string("'") + key + "' must be an array of arrays");
  Partition out;
  for (const auto& inner : j) {
    if (!inner.is_array()) throw ParseError(1, std::string("'") + key + "' must be an array of arrays");
    std::vector<int> list;
    for (const auto& x : inner) {
      if (!x.is_number_integer()) throw ParseError(1, std::string("'") + key + "' entries must be integers");
      list.push_back(x.get<int>());
    }
    out.push_back(std::move(list));
  }
  return out;
}

}  // namespace

std::string structure_to_json(const IncidenceStructure& s) {
  Json j;
  j["points"] = s.num_points();
  j["blocks"] = int_lists(s.blocks());
  if (s.groups()) j["groups"] = int_lists(*s.groups());
  if (s.parallel_classes()) j["parallel_classes"] = int_lists(*s.parallel_classes());
  return j.dump() + "\n";
}

IncidenceStructure structure_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError(1, "structure must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "points" && key != "blocks" && key != "groups" && key != "parallel_classes") {
      throw ParseError(1, "unknown key '" + key + "'");
    }
  }
  if (!j.contains("points") || !j["points"].is_number_integer()) {
    throw ParseError(1, "'points' must be an integer");
  }
  if (!j.contains("blocks")) throw ParseError(1, "missing 'blocks'");
  std::optional<Partition> groups;
  std::optional<Partition> classes;
  if (j.contains("groups")) groups = read_lists(j["groups"], "groups");
  if (j.contains("parallel_classes")) classes = read_lists(j["parallel_classes"], "parallel_classes");
  return IncidenceStructure(j["points"].get<int>(), read_lists(j["blocks"], "blocks"),
                            std::move(groups), std::move(classes));
}

std::string to_dgr(const Digraph& d) {
  std::string out = std::to_string(d.size()) + "\n";
  out.reserve(out.size() + static_cast<std::size_t>(d.size()) * (static_cast<std::size_t>(d.size()) + 1));
  for (int u = 0; u < d.size(); ++u) {
    for (int v = 0; v < d.size(); ++v) out.push_back(d.has_edge(u, v) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

Digraph from_dgr(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "empty input");
  const int n = parse_int(strip(lines[0]), 1);
  if (lines.size() < static_cast<std::size_t>(n) + 1) {
    throw ParseError(lines.size() + 1, "expected " + std::to_string(n) + " matrix rows");
  }
  for (std::size_t i = static_cast<std::size_t>(n) + 1; i < lines.size(); ++i) {
    if (!strip(lines[i]).empty()) throw ParseError(i + 1, "trailing content after matrix");
  }
  Digraph d(n);
  for (int u = 0; u < n; ++u) {
    const std::size_t line_no = static_cast<std::size_t>(u) + 2;
    const auto row = lines[static_cast<std::size_t>(u) + 1];
    if (row.size() != static_cast<std::size_t>(n)) {
      throw ParseError(line_no, "row has " + std::to_string(row.size()) + " characters, expected " +
                                    std::to_string(n));
    }
    for (int v = 0; v < n; ++v) {
      const char c = row[static_cast<std::size_t>(v)];
      if (c != '0' && c != '1') throw ParseError(line_no, "characters must be 0 or 1");
      if (c == '1') {
        if (u == v) throw ParseError(line_no, "loop at vertex " + std::to_string(u));
        d.add_edge(u, v);
      }
    }
  }
  return d;
}

std::string to_edge_list(const Digraph& d) {
  std::string out;
  for (int u = 0; u < d.size(); ++u) {
    for (int v = 0; v < d.size(); ++v) {
      if (d.has_edge(u, v)) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
  }
  return out;
}

Digraph from_edge_list(std::string_view text) {
  std::vector<std::pair<int, int>> edges;
  int max_vertex = -1;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto parts = tokens(lines[i]);
    if (parts.empty()) continue;
    if (parts.size() != 2) throw ParseError(i + 1, "expected 'u v'");
    const int u = parse_int(parts[0], i + 1);
    const int v = parse_int(parts[1], i + 1);
    if (u == v) throw ParseError(i + 1, "loop at vertex " + std::to_string(u));
    if (std::max(u, v) >= kMaxDigraphOrder) throw ParseError(i + 1, "vertex index too large");
    edges.emplace_back(u, v);
    max_vertex = std::max({max_vertex, u, v});
  }
  if (edges.empty()) throw ParseError(1, "edge list is empty");
  Digraph d(max_vertex + 1);
  for (auto [u, v] : edges) d.add_edge(u, v);
  return d;
}

Digraph parse_digraph(std::string_view text) {
  for (const auto line : split_lines(text)) {
    const auto parts = tokens(line);
    if (parts.empty()) continue;
    return parts.size() == 1 ? from_dgr(text) : from_edge_list(text);
  }
  throw ParseError(1, "empty input");
}

std::vector<MappingRow> parse_mapping_table(std::string_view text) {
  auto parse_side = [](std::string_view side, std::size_t line) {
    side = strip(side);
    const auto comma = side.find(',');
    if (comma == std::string_view::npos) throw ParseError(line, "expected 'point,block'");
    const std::string_view parts[2] = {strip(side.substr(0, comma)), strip(side.substr(comma + 1))};
    for (auto part : parts) {
      if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) { return c >= '1' && c <= '9'; })) {
        throw ParseError(line, "anti-flag tokens must be digits 1-9");
      }
    }
    if ((parts[0].size() == 1) == (parts[1].size() == 1)) {
      throw ParseError(line, "exactly one token must be a single point");
    }
    const auto point_tok = parts[0].size() == 1 ? parts[0] : parts[1];
    const auto block_tok = parts[0].size() == 1 ? parts[1] : parts[0];
    NamedAntiFlag flag{point_tok[0] - '0', {}};
    for (char c : block_tok) flag.block.push_back(c - '0');
    std::sort(flag.block.begin(), flag.block.end());
    return flag;
  };

  auto parse_cell = [&](std::string_view cell, std::size_t line) {
    std::size_t sep = cell.find("↔");
    std::size_t sep_len = std::string_view("↔").size();
    if (sep == std::string_view::npos) {
      sep = cell.find("<->");
      sep_len = 3;
    }
    if (sep == std::string_view::npos) throw ParseError(line, "missing '↔' separator");
    return MappingRow{parse_side(cell.substr(0, sep), line), parse_side(cell.substr(sep + sep_len), line)};
  };

  std::vector<MappingRow> rows;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto line = strip(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    while (true) {
      const auto bar = line.find('|');
      rows.push_back(parse_cell(line.substr(0, bar), i + 1));
      if (bar == std::string_view::npos) break;
      line = line.substr(bar + 1);
    }
  }
  return rows;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::InvalidArgument, "write failed for " + path);
}

}  // namespace antiflag
