#include "antiflag/digraph.hpp"

#include <string>

#include "antiflag/error.hpp"

namespace antiflag {

Digraph::Digraph(int n) : n_(n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative vertex count");
  if (n > kMaxDigraphOrder) {
    throw Error(ErrorCode::TooLarge, "digraph order " + std::to_string(n) + " exceeds " +
                                         std::to_string(kMaxDigraphOrder));
  }
  words_ = (static_cast<std::size_t>(n) + 63) / 64;
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

void Digraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw Error(ErrorCode::InvalidArgument, "vertex out of range", {u, v});
  }
  if (u == v) {
    throw Error(ErrorCode::InvalidArgument, "loop at vertex " + std::to_string(u), {u});
  }
  bits_[offset(u) + static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (static_cast<unsigned>(v) % 64);
}

void Digraph::remove_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw Error(ErrorCode::InvalidArgument, "vertex out of range", {u, v});
  }
  bits_[offset(u) + static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (static_cast<unsigned>(v) % 64));
}

void Digraph::or_row(int u, std::span<const std::uint64_t> mask) {
  if (u < 0 || u >= n_ || mask.size() != words_) {
    throw Error(ErrorCode::InvalidArgument, "row mask does not fit", {u});
  }
  if ((mask[static_cast<std::size_t>(u) / 64] >> (static_cast<unsigned>(u) % 64)) & 1U) {
    throw Error(ErrorCode::InvalidArgument, "loop at vertex " + std::to_string(u), {u});
  }
  std::uint64_t* row = bits_.data() + offset(u);
  for (std::size_t i = 0; i < words_; ++i) row[i] |= mask[i];
  // Bits past n in the last word must stay clear.
  if (n_ % 64 != 0 && words_ > 0) row[words_ - 1] &= (std::uint64_t{1} << (n_ % 64)) - 1;
}

int Digraph::out_degree(int u) const {
  int total = 0;
  for (std::uint64_t w : row(u)) total += std::popcount(w);
  return total;
}

int Digraph::in_degree(int v) const {
  int total = 0;
  for (int u = 0; u < n_; ++u) total += has_edge(u, v) ? 1 : 0;
  return total;
}

std::uint64_t Digraph::edge_count() const {
  std::uint64_t total = 0;
  for (std::uint64_t w : bits_) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

Digraph Digraph::transposed() const {
  Digraph t(n_);
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      if (has_edge(u, v)) t.add_edge(v, u);
    }
  }
  t.labels_ = labels_;
  return t;
}

void Digraph::set_vertex_labels(std::vector<AntiFlag> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n_) {
    throw Error(ErrorCode::SizeMismatch, "label count differs from vertex count");
  }
  labels_ = std::move(labels);
}

IntMatrix square(const Digraph& d) {
  const Digraph t = d.transposed();
  IntMatrix out{d.size(), std::vector<std::int64_t>(static_cast<std::size_t>(d.size()) *
                                                    static_cast<std::size_t>(d.size()))};
  for (int u = 0; u < d.size(); ++u) {
    for (int w = 0; w < d.size(); ++w) {
      out.data[static_cast<std::size_t>(u) * static_cast<std::size_t>(d.size()) +
               static_cast<std::size_t>(w)] = popcount_and(d.row(u), t.row(w));
    }
  }
  return out;
}

}  // namespace antiflag
