#include "antiflag/incidence.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "antiflag/error.hpp"
#include "antiflag/ffield.hpp"

namespace antiflag {

namespace {

[[noreturn]] void invalid(const std::string& message, std::vector<std::int64_t> witness = {}) {
  throw Error(ErrorCode::InvalidStructure, message, std::move(witness));
}

std::string pair_str(std::int64_t a, std::int64_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// Number of blocks containing both points, for every ordered pair.
std::vector<int> pair_counts(const IncidenceStructure& s) {
  const auto v = static_cast<std::size_t>(s.num_points());
  std::vector<int> counts(v * v, 0);
  for (const Block& block : s.blocks()) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = i + 1; j < block.size(); ++j) {
        const auto a = static_cast<std::size_t>(block[i]);
        const auto b = static_cast<std::size_t>(block[j]);
        ++counts[a * v + b];
        ++counts[b * v + a];
      }
    }
  }
  return counts;
}

std::vector<int> replication(const IncidenceStructure& s) {
  std::vector<int> r(static_cast<std::size_t>(s.num_points()), 0);
  for (const Block& block : s.blocks()) {
    for (int p : block) ++r[static_cast<std::size_t>(p)];
  }
  return r;
}

std::vector<std::vector<int>> blocks_through(const IncidenceStructure& s) {
  std::vector<std::vector<int>> through(static_cast<std::size_t>(s.num_points()));
  for (int b = 0; b < s.num_blocks(); ++b) {
    for (int p : s.block(b)) through[static_cast<std::size_t>(p)].push_back(b);
  }
  return through;
}

int intersection_size(const Block& a, const Block& b) {
  int count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

int checked_pow(int base, int exp, std::uint64_t limit, const char* what) {
  std::uint64_t value = 1;
  for (int i = 0; i < exp; ++i) {
    value *= static_cast<std::uint64_t>(base);
    if (value > limit) {
      throw Error(ErrorCode::OutOfBudget, std::string(what) + " " + std::to_string(base) + "^" +
                                              std::to_string(exp) + " exceeds budget " +
                                              std::to_string(limit));
    }
  }
  return static_cast<int>(value);
}

}  // namespace

IncidenceStructure::IncidenceStructure(int num_points, std::vector<Block> blocks,
                                       std::optional<Partition> groups,
                                       std::optional<Partition> parallel_classes)
    : num_points_(num_points),
      blocks_(std::move(blocks)),
      groups_(std::move(groups)),
      parallel_classes_(std::move(parallel_classes)) {
  if (num_points_ < 0) invalid("negative point count");
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const Block& block = blocks_[b];
    const auto w = static_cast<std::int64_t>(b);
    if (block.empty()) invalid("block " + std::to_string(b) + " is empty", {w});
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (block[i] < 0 || block[i] >= num_points_) {
        invalid("block " + std::to_string(b) + " has point out of range", {w});
      }
      if (i > 0 && block[i - 1] >= block[i]) {
        invalid("block " + std::to_string(b) + " is not strictly increasing", {w});
      }
    }
  }
  {
    std::set<Block> seen;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if (!seen.insert(blocks_[b]).second) {
        invalid("duplicate block " + std::to_string(b), {static_cast<std::int64_t>(b)});
      }
    }
  }
  if (groups_) {
    std::vector<int> owner(static_cast<std::size_t>(num_points_), -1);
    for (std::size_t g = 0; g < groups_->size(); ++g) {
      if ((*groups_)[g].empty()) invalid("empty group " + std::to_string(g));
      for (int p : (*groups_)[g]) {
        if (p < 0 || p >= num_points_) invalid("group point out of range", {p});
        if (owner[static_cast<std::size_t>(p)] != -1) invalid("point in two groups", {p});
        owner[static_cast<std::size_t>(p)] = static_cast<int>(g);
      }
    }
    for (int p = 0; p < num_points_; ++p) {
      if (owner[static_cast<std::size_t>(p)] == -1) invalid("point in no group", {p});
    }
  }
  if (parallel_classes_) {
    std::vector<int> owner(blocks_.size(), -1);
    for (std::size_t c = 0; c < parallel_classes_->size(); ++c) {
      std::vector<int> covered(static_cast<std::size_t>(num_points_), 0);
      for (int b : (*parallel_classes_)[c]) {
        if (b < 0 || b >= num_blocks()) invalid("parallel class block out of range", {b});
        if (owner[static_cast<std::size_t>(b)] != -1) invalid("block in two classes", {b});
        owner[static_cast<std::size_t>(b)] = static_cast<int>(c);
        for (int p : blocks_[static_cast<std::size_t>(b)]) {
          if (covered[static_cast<std::size_t>(p)]++ != 0) {
            invalid("blocks of class " + std::to_string(c) + " overlap", {static_cast<int>(c), p});
          }
        }
      }
      for (int p = 0; p < num_points_; ++p) {
        if (covered[static_cast<std::size_t>(p)] == 0) {
          invalid("class " + std::to_string(c) + " misses a point", {static_cast<int>(c), p});
        }
      }
    }
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if (owner[b] == -1) invalid("block in no parallel class", {static_cast<std::int64_t>(b)});
    }
  }
}

bool IncidenceStructure::incident(int point, int block) const {
  const Block& b = blocks_.at(static_cast<std::size_t>(block));
  return std::binary_search(b.begin(), b.end(), point);
}

IncidenceStructure build_gdd(int l, int q, std::uint64_t block_budget) {
  if (l < 2 || q < 2) {
    throw Error(ErrorCode::InvalidArgument, "build_gdd requires l >= 2 and q >= 2");
  }
  const int count = checked_pow(q, l, block_budget, "block count");
  // The point count ql must also fit in an int.
  if (static_cast<std::int64_t>(q) * l > 1'000'000'000) {
    throw Error(ErrorCode::OutOfBudget, "point count too large");
  }

  Partition groups(static_cast<std::size_t>(l));
  for (int g = 0; g < l; ++g) {
    for (int i = 0; i < q; ++i) groups[static_cast<std::size_t>(g)].push_back(g * q + i);
  }

  std::vector<Block> blocks;
  blocks.reserve(static_cast<std::size_t>(count));
  std::vector<int> choice(static_cast<std::size_t>(l), 0);
  for (int n = 0; n < count; ++n) {
    Block block(static_cast<std::size_t>(l));
    for (int g = 0; g < l; ++g) block[static_cast<std::size_t>(g)] = g * q + choice[static_cast<std::size_t>(g)];
    blocks.push_back(std::move(block));
    for (int g = l - 1; g >= 0; --g) {
      if (++choice[static_cast<std::size_t>(g)] < q) break;
      choice[static_cast<std::size_t>(g)] = 0;
    }
  }
  return IncidenceStructure(q * l, std::move(blocks), std::move(groups));
}

IncidenceStructure build_affine_plane(int q) {
  const FiniteField field = make_field(q);
  if (q > 64) throw Error(ErrorCode::TooLarge, "affine plane order capped at 64");

  std::vector<Block> blocks;
  Partition classes;
  for (int slope = 0; slope < q; ++slope) {
    std::vector<int> cls;
    for (int intercept = 0; intercept < q; ++intercept) {
      Block line;
      for (int x = 0; x < q; ++x) {
        line.push_back(x * q + field.add(field.mul(slope, x), intercept));
      }
      std::sort(line.begin(), line.end());
      cls.push_back(static_cast<int>(blocks.size()));
      blocks.push_back(std::move(line));
    }
    classes.push_back(std::move(cls));
  }
  std::vector<int> verticals;
  for (int c = 0; c < q; ++c) {
    Block line;
    for (int y = 0; y < q; ++y) line.push_back(c * q + y);
    verticals.push_back(static_cast<int>(blocks.size()));
    blocks.push_back(std::move(line));
  }
  classes.push_back(std::move(verticals));
  return IncidenceStructure(q * q, std::move(blocks), std::nullopt, std::move(classes));
}

IncidenceStructure build_hyperplane_design(int q, int n, std::uint64_t point_budget) {
  if (!prime_power_decomposition(q)) {
    throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  }
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "hyperplane design requires n >= 2");
  const int num_points = checked_pow(q, n, point_budget, "point count");
  const FiniteField field = make_field(q);

  std::vector<std::vector<int>> coords(static_cast<std::size_t>(num_points),
                                       std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < num_points; ++x) {
    int rest = x;
    for (int i = n - 1; i >= 0; --i) {
      coords[static_cast<std::size_t>(x)][static_cast<std::size_t>(i)] = rest % q;
      rest /= q;
    }
  }

  std::vector<Block> blocks;
  Partition classes;
  for (int a = 1; a < num_points; ++a) {
    const auto& normal = coords[static_cast<std::size_t>(a)];
    const auto lead = std::find_if(normal.begin(), normal.end(), [](int c) { return c != 0; });
    if (*lead != 1) continue;

    std::vector<Block> by_value(static_cast<std::size_t>(q));
    for (int x = 0; x < num_points; ++x) {
      int dot = 0;
      for (int i = 0; i < n; ++i) {
        dot = field.add(dot, field.mul(normal[static_cast<std::size_t>(i)],
                                       coords[static_cast<std::size_t>(x)][static_cast<std::size_t>(i)]));
      }
      by_value[static_cast<std::size_t>(dot)].push_back(x);
    }
    std::vector<int> cls;
    for (auto& block : by_value) {
      cls.push_back(static_cast<int>(blocks.size()));
      blocks.push_back(std::move(block));
    }
    classes.push_back(std::move(cls));
  }
  return IncidenceStructure(num_points, std::move(blocks), std::nullopt, std::move(classes));
}

IncidenceStructure select_parallel_classes(const IncidenceStructure& s,
                                           std::span<const int> classes) {
  if (!s.parallel_classes()) {
    throw Error(ErrorCode::NoParallelClasses, "structure has no parallel classes");
  }
  const Partition& all = *s.parallel_classes();
  std::vector<Block> blocks;
  Partition kept;
  std::vector<bool> used(all.size(), false);
  for (int c : classes) {
    if (c < 0 || static_cast<std::size_t>(c) >= all.size() || used[static_cast<std::size_t>(c)]) {
      throw Error(ErrorCode::BadL, "invalid or repeated parallel class " + std::to_string(c));
    }
    used[static_cast<std::size_t>(c)] = true;
    std::vector<int> cls;
    for (int b : all[static_cast<std::size_t>(c)]) {
      cls.push_back(static_cast<int>(blocks.size()));
      blocks.push_back(s.block(b));
    }
    kept.push_back(std::move(cls));
  }
  return IncidenceStructure(s.num_points(), std::move(blocks), s.groups(), std::move(kept));
}

IncidenceStructure restrict_parallel_classes(const IncidenceStructure& s, int l) {
  if (!s.parallel_classes()) {
    throw Error(ErrorCode::NoParallelClasses, "structure has no parallel classes");
  }
  const int available = static_cast<int>(s.parallel_classes()->size());
  if (l < 1 || l > available) {
    throw Error(ErrorCode::BadL, "l = " + std::to_string(l) + " outside 1.." +
                                     std::to_string(available));
  }
  std::vector<int> first(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) first[static_cast<std::size_t>(i)] = i;
  return select_parallel_classes(s, first);
}

IncidenceStructure build_partition_structure(int q, int l) {
  if (q < 1 || l < 2) {
    throw Error(ErrorCode::InvalidArgument, "partition structure requires q >= 1 and l >= 2");
  }
  std::vector<Block> blocks(static_cast<std::size_t>(l));
  std::vector<int> all;
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < q; ++j) blocks[static_cast<std::size_t>(i)].push_back(i * q + j);
    all.push_back(i);
  }
  Partition groups = blocks;
  return IncidenceStructure(q * l, std::move(blocks), std::move(groups), Partition{all});
}

IncidenceStructure build_fano() {
  std::vector<Block> blocks;
  for (int i = 0; i < 7; ++i) {
    Block b{i % 7, (i + 1) % 7, (i + 3) % 7};
    std::sort(b.begin(), b.end());
    blocks.push_back(std::move(b));
  }
  return IncidenceStructure(7, std::move(blocks));
}

PgParams verify_pg(const IncidenceStructure& s) {
  if (s.num_points() == 0 || s.num_blocks() == 0) {
    throw NotPgError(1, "empty structure", {});
  }
  const int kappa = static_cast<int>(s.block(0).size());
  for (int b = 0; b < s.num_blocks(); ++b) {
    if (static_cast<int>(s.block(b).size()) != kappa) {
      throw NotPgError(1, "axiom 1: line " + std::to_string(b) + " has " +
                              std::to_string(s.block(b).size()) + " points, line 0 has " +
                              std::to_string(kappa),
                       {b});
    }
  }
  if (kappa < 2) throw NotPgError(1, "axiom 1: lines have fewer than 2 points", {0});

  const auto r = replication(s);
  const int rho = r[0];
  for (int p = 0; p < s.num_points(); ++p) {
    if (r[static_cast<std::size_t>(p)] != rho) {
      throw NotPgError(1, "axiom 1: point " + std::to_string(p) + " lies on " +
                              std::to_string(r[static_cast<std::size_t>(p)]) +
                              " lines, point 0 on " + std::to_string(rho),
                       {p});
    }
  }
  if (rho < 2) throw NotPgError(1, "axiom 1: points lie on fewer than 2 lines", {0});

  const auto counts = pair_counts(s);
  const auto v = static_cast<std::size_t>(s.num_points());
  for (std::size_t a = 0; a < v; ++a) {
    for (std::size_t b = a + 1; b < v; ++b) {
      if (counts[a * v + b] > 1) {
        throw NotPgError(2, "axiom 2: points " + pair_str(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)) +
                                " share " + std::to_string(counts[a * v + b]) + " lines",
                         {static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)});
      }
    }
  }

  const auto through = blocks_through(s);
  std::optional<int> tau;
  for (int p = 0; p < s.num_points(); ++p) {
    for (int line = 0; line < s.num_blocks(); ++line) {
      if (s.incident(p, line)) continue;
      int meeting = 0;
      for (int other : through[static_cast<std::size_t>(p)]) {
        if (intersection_size(s.block(other), s.block(line)) > 0) ++meeting;
      }
      if (!tau) tau = meeting;
      if (meeting != *tau || meeting < 1) {
        throw NotPgError(3, "axiom 3: anti-flag " + pair_str(p, line) + " sees " +
                                std::to_string(meeting) + " lines, expected " +
                                std::to_string(*tau) + " >= 1",
                         {p, line});
      }
    }
  }
  if (!tau) throw NotPgError(3, "axiom 3: no anti-flags", {});
  return {kappa, rho, *tau};
}

GddParams verify_gdd(const IncidenceStructure& s) {
  if (!s.groups()) throw Error(ErrorCode::PreconditionFailed, "structure has no groups");
  const Partition& groups = *s.groups();
  const int q = static_cast<int>(groups.front().size());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (static_cast<int>(groups[g].size()) != q) {
      throw Error(ErrorCode::NotGdd, "group " + std::to_string(g) + " has a different size",
                  {static_cast<std::int64_t>(g)});
    }
  }
  std::vector<int> group_of(static_cast<std::size_t>(s.num_points()));
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (int p : groups[g]) group_of[static_cast<std::size_t>(p)] = static_cast<int>(g);
  }

  const auto counts = pair_counts(s);
  const auto v = static_cast<std::size_t>(s.num_points());
  std::optional<int> index;
  for (std::size_t a = 0; a < v; ++a) {
    for (std::size_t b = a + 1; b < v; ++b) {
      const int c = counts[a * v + b];
      const std::vector<std::int64_t> witness{static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)};
      if (group_of[a] == group_of[b]) {
        if (c != 0) {
          throw Error(ErrorCode::NotGdd, "same-group points " + pair_str(witness[0], witness[1]) +
                                             " share " + std::to_string(c) + " blocks",
                      witness);
        }
        continue;
      }
      if (!index) index = c;
      if (c != *index || c < 1) {
        throw Error(ErrorCode::NotGdd, "cross-group points " + pair_str(witness[0], witness[1]) +
                                           " share " + std::to_string(c) + " blocks, expected " +
                                           std::to_string(*index) + " >= 1",
                    witness);
      }
    }
  }
  if (!index) throw Error(ErrorCode::NotGdd, "fewer than two groups", {});
  return {static_cast<int>(groups.size()), q, *index};
}

DesignParams verify_2design(const IncidenceStructure& s) {
  if (s.num_points() < 2 || s.num_blocks() == 0) {
    throw Error(ErrorCode::NotDesign, "need at least two points and one block", {});
  }
  const int v = s.num_points();
  const int k = static_cast<int>(s.block(0).size());
  for (int b = 0; b < s.num_blocks(); ++b) {
    if (static_cast<int>(s.block(b).size()) != k) {
      throw Error(ErrorCode::NotDesign, "block " + std::to_string(b) + " has a different size", {b});
    }
  }
  if (k >= v) throw Error(ErrorCode::NotDesign, "blocks contain every point", {0});

  const auto r = replication(s);
  for (int p = 0; p < v; ++p) {
    if (r[static_cast<std::size_t>(p)] != r[0]) {
      throw Error(ErrorCode::NotDesign, "point " + std::to_string(p) + " has a different replication", {p});
    }
  }

  const auto counts = pair_counts(s);
  const auto uv = static_cast<std::size_t>(v);
  const int lambda = counts[1];
  for (std::size_t a = 0; a < uv; ++a) {
    for (std::size_t b = a + 1; b < uv; ++b) {
      const int c = counts[a * uv + b];
      if (c != lambda || c < 1) {
        throw Error(ErrorCode::NotDesign,
                    "points " + pair_str(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)) +
                        " share " + std::to_string(c) + " blocks, expected " +
                        std::to_string(lambda) + " >= 1",
                    {static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)});
      }
    }
  }

  DesignParams params{v, s.num_blocks(), k, r[0], lambda, std::nullopt, std::nullopt};
  if (s.parallel_classes()) {
    const Partition& classes = *s.parallel_classes();
    params.s = static_cast<int>(classes.front().size());
    std::vector<int> class_of(static_cast<std::size_t>(s.num_blocks()));
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (int b : classes[c]) class_of[static_cast<std::size_t>(b)] = static_cast<int>(c);
    }
    std::optional<int> meet;
    bool constant = true;
    for (int a = 0; a < s.num_blocks() && constant; ++a) {
      for (int b = a + 1; b < s.num_blocks(); ++b) {
        if (class_of[static_cast<std::size_t>(a)] == class_of[static_cast<std::size_t>(b)]) continue;
        const int size = intersection_size(s.block(a), s.block(b));
        if (!meet) meet = size;
        if (size != *meet) {
          constant = false;
          break;
        }
      }
    }
    if (constant && meet && *meet > 0 && v == *meet * *params.s * *params.s &&
        k == *meet * *params.s) {
      params.m = meet;
    }
  }
  return params;
}

std::vector<AntiFlag> anti_flags(const IncidenceStructure& s) {
  std::vector<AntiFlag> out;
  for (int p = 0; p < s.num_points(); ++p) {
    for (int b = 0; b < s.num_blocks(); ++b) {
      if (!s.incident(p, b)) out.push_back({p, b});
    }
  }
  return out;
}

}  // namespace antiflag
