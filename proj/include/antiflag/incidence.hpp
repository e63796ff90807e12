#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace antiflag {

inline constexpr std::uint64_t kDefaultBlockBudget = 1'000'000;
inline constexpr std::uint64_t kDefaultPointBudget = 100'000;

using Block = std::vector<int>;
using Partition = std::vector<std::vector<int>>;

/// Finite incidence structure: points 0..num_points-1 and a list of blocks,
/// each a strictly increasing point list. Optionally carries a partition of
/// the points into groups and a partition of the block indices into
/// parallel classes. All invariants are checked on construction
/// (InvalidStructure otherwise) and the value is immutable afterwards.
class IncidenceStructure {
 public:
  IncidenceStructure(int num_points, std::vector<Block> blocks,
                     std::optional<Partition> groups = std::nullopt,
                     std::optional<Partition> parallel_classes = std::nullopt);

  int num_points() const noexcept { return num_points_; }
  int num_blocks() const noexcept { return static_cast<int>(blocks_.size()); }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  const Block& block(int index) const { return blocks_.at(static_cast<std::size_t>(index)); }
  const std::optional<Partition>& groups() const noexcept { return groups_; }
  const std::optional<Partition>& parallel_classes() const noexcept { return parallel_classes_; }

  bool incident(int point, int block) const;

  bool operator==(const IncidenceStructure& other) const {
    return num_points_ == other.num_points_ && blocks_ == other.blocks_ &&
           groups_ == other.groups_ && parallel_classes_ == other.parallel_classes_;
  }

 private:
  int num_points_;
  std::vector<Block> blocks_;
  std::optional<Partition> groups_;
  std::optional<Partition> parallel_classes_;
};

struct AntiFlag {
  int point;
  int block;
  auto operator<=>(const AntiFlag&) const = default;
};

struct PgParams {
  int kappa;  // points per line
  int rho;    // lines per point
  int tau;    // connection number
  bool operator==(const PgParams&) const = default;
};

struct GddParams {
  int l;           // number of groups
  int q;           // group size
  int pair_index;  // blocks through any two points of different groups
  bool operator==(const GddParams&) const = default;
};

/// 2-(v, b, k, r, lambda) design parameters, plus the blocks per parallel
/// class `s` and the constant intersection `m` of non-parallel blocks when
/// the structure is affine resolvable.
struct DesignParams {
  int v;
  int b;
  int k;
  int r;
  int lambda;
  std::optional<int> s;
  std::optional<int> m;
  bool operator==(const DesignParams&) const = default;
};

/// GD(l, q^{l-2}, q; ql): l consecutive groups of size q, every transversal
/// as a block, blocks in lexicographic order. OutOfBudget when q^l exceeds
/// `block_budget`.
IncidenceStructure build_gdd(int l, int q, std::uint64_t block_budget = kDefaultBlockBudget);

/// AG(2, q) with point (x, y) at index x*q + y. Lines y = m x + b are grouped
/// by slope (field-index order, then intercept), followed by the verticals.
IncidenceStructure build_affine_plane(int q);

/// Points of F_q^n (coordinate 0 most significant in the base-q index) and
/// the affine hyperplanes a.x = c, one normalised a per direction (first
/// nonzero coordinate 1), directions in index order, c in field order.
IncidenceStructure build_hyperplane_design(int q, int n,
                                           std::uint64_t point_budget = kDefaultPointBudget);

/// Keeps every point and the blocks of the first `l` parallel classes.
IncidenceStructure restrict_parallel_classes(const IncidenceStructure& s, int l);

/// Keeps every point and the blocks of the listed parallel classes, in the
/// listed order.
IncidenceStructure select_parallel_classes(const IncidenceStructure& s,
                                           std::span<const int> classes);

/// ql points split into l consecutive q-sets which serve as blocks and groups.
IncidenceStructure build_partition_structure(int q, int l);

/// Fano plane from the difference set {0, 1, 3} mod 7.
IncidenceStructure build_fano();

/// Throws NotPgError naming the first failed axiom and a witness.
PgParams verify_pg(const IncidenceStructure& s);

/// Requires groups; throws NotGdd with a witness pair.
GddParams verify_gdd(const IncidenceStructure& s);

/// Throws NotDesign with a witness.
DesignParams verify_2design(const IncidenceStructure& s);

/// Non-incident (point, block) pairs in lexicographic order. This order is
/// the vertex numbering of every anti-flag digraph.
std::vector<AntiFlag> anti_flags(const IncidenceStructure& s);

}  // namespace antiflag
