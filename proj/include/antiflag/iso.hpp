#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "antiflag/digraph.hpp"

namespace antiflag {

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000;

/// A permutation of 0..n-1; construction rejects anything else.
class VertexMapping {
 public:
  explicit VertexMapping(std::vector<int> perm);
  static VertexMapping identity(int n);

  int size() const noexcept { return static_cast<int>(perm_.size()); }
  int operator()(int u) const { return perm_.at(static_cast<std::size_t>(u)); }
  const std::vector<int>& perm() const noexcept { return perm_; }
  bool operator==(const VertexMapping&) const = default;

 private:
  std::vector<int> perm_;
};

/// adj1[u][v] == adj2[f(u)][f(v)] for all u, v. SizeMismatch on differing orders.
bool verify_mapping(const Digraph& d1, const Digraph& d2, const VertexMapping& f);

/// Vertex colours, values 0..k-1.
using Coloring = std::vector<int>;

/// Iterates colour refinement on (colour, out-neighbour colours,
/// in-neighbour colours) to its fixpoint. New colours are ranks of the sorted
/// signatures, so isomorphic inputs receive identical colour names.
Coloring refine(const Digraph& d, Coloring initial);

/// Every colour class has constant out- and in-degree into every class.
bool is_equitable(const Digraph& d, const Coloring& colors);

enum class IsoOutcome { Isomorphic, NotIsomorphic, BudgetExceeded };

struct IsoResult {
  IsoOutcome outcome;
  std::optional<VertexMapping> mapping;  // set iff Isomorphic
  std::uint64_t nodes = 0;
};

/// Individualisation-refinement search. The target cell is the smallest
/// non-singleton class (lowest colour on ties). A returned mapping always
/// passes verify_mapping; NotIsomorphic is only reported after the tree is
/// exhausted.
IsoResult are_isomorphic(const Digraph& d1, const Digraph& d2,
                         std::uint64_t budget = kDefaultNodeBudget);

struct CanonicalForm {
  /// Sends each vertex to its canonical position.
  VertexMapping labeling;
  /// Row-major '0'/'1' adjacency of the relabelled digraph.
  std::string adjacency;
};

/// Minimum adjacency string over all leaves of the search tree, or nullopt
/// when the budget runs out first.
std::optional<CanonicalForm> canonical_form(const Digraph& d,
                                            std::uint64_t budget = kDefaultNodeBudget);

/// Digraph with vertex u renamed to f(u).
Digraph relabel(const Digraph& d, const VertexMapping& f);

}  // namespace antiflag
