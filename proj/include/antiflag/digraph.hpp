#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "antiflag/incidence.hpp"

namespace antiflag {

inline constexpr int kMaxDigraphOrder = 1 << 14;

/// Loopless digraph stored as an n x n 0/1 adjacency matrix of packed bit
/// rows: bit v of row u is set iff u -> v. The diagonal is always zero.
class Digraph {
 public:
  Digraph() = default;
  /// Edgeless digraph on n vertices. TooLarge above kMaxDigraphOrder.
  explicit Digraph(int n);

  int size() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool has_edge(int u, int v) const {
    return (bits_[offset(u) + static_cast<std::size_t>(v) / 64] >> (static_cast<unsigned>(v) % 64)) & 1U;
  }
  /// Throws InvalidArgument for a loop or an out-of-range vertex.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  /// ORs `mask` into row u. Throws InvalidArgument if that would set the
  /// diagonal bit.
  void or_row(int u, std::span<const std::uint64_t> mask);

  std::span<const std::uint64_t> row(int u) const {
    return {bits_.data() + offset(u), words_};
  }

  int out_degree(int u) const;
  int in_degree(int v) const;
  std::uint64_t edge_count() const;

  Digraph transposed() const;

  /// Optional provenance: the anti-flag behind each vertex.
  const std::vector<AntiFlag>& vertex_labels() const noexcept { return labels_; }
  void set_vertex_labels(std::vector<AntiFlag> labels);

  /// Compares adjacency only.
  bool operator==(const Digraph& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }

 private:
  std::size_t offset(int u) const { return static_cast<std::size_t>(u) * words_; }

  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<AntiFlag> labels_;
};

inline int popcount_and(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  int total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

/// Dense n x n integer matrix, row-major.
struct IntMatrix {
  int n = 0;
  std::vector<std::int64_t> data;

  std::int64_t at(int r, int c) const {
    return data[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) + static_cast<std::size_t>(c)];
  }
  bool operator==(const IntMatrix&) const = default;
};

/// A^2 via popcounts of out-rows against rows of the transpose.
IntMatrix square(const Digraph& d);

}  // namespace antiflag
