#include "antiflag/iso.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "antiflag/error.hpp"

namespace antiflag {

VertexMapping::VertexMapping(std::vector<int> perm) : perm_(std::move(perm)) {
  std::vector<bool> seen(perm_.size(), false);
  for (int x : perm_) {
    if (x < 0 || static_cast<std::size_t>(x) >= perm_.size() || seen[static_cast<std::size_t>(x)]) {
      throw Error(ErrorCode::InvalidArgument, "mapping is not a permutation");
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

VertexMapping VertexMapping::identity(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  return VertexMapping(std::move(perm));
}

bool verify_mapping(const Digraph& d1, const Digraph& d2, const VertexMapping& f) {
  if (d1.size() != d2.size() || f.size() != d1.size()) {
    throw Error(ErrorCode::SizeMismatch, "digraphs and mapping differ in size");
  }
  for (int u = 0; u < d1.size(); ++u) {
    for (int v = 0; v < d1.size(); ++v) {
      if (d1.has_edge(u, v) != d2.has_edge(f(u), f(v))) return false;
    }
  }
  return true;
}

Digraph relabel(const Digraph& d, const VertexMapping& f) {
  if (f.size() != d.size()) throw Error(ErrorCode::SizeMismatch, "mapping size differs");
  Digraph out(d.size());
  for (int u = 0; u < d.size(); ++u) {
    for (int v = 0; v < d.size(); ++v) {
      if (d.has_edge(u, v)) out.add_edge(f(u), f(v));
    }
  }
  return out;
}

namespace {

struct Adjacency {
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> in;

  explicit Adjacency(const Digraph& d)
      : out(static_cast<std::size_t>(d.size())), in(static_cast<std::size_t>(d.size())) {
    for (int u = 0; u < d.size(); ++u) {
      for (int v = 0; v < d.size(); ++v) {
        if (d.has_edge(u, v)) {
          out[static_cast<std::size_t>(u)].push_back(v);
          in[static_cast<std::size_t>(v)].push_back(u);
        }
      }
    }
  }
};

using Signature = std::vector<int>;

Signature signature_of(const Adjacency& adj, const Coloring& c, int v) {
  const auto& outs = adj.out[static_cast<std::size_t>(v)];
  const auto& ins = adj.in[static_cast<std::size_t>(v)];
  Signature sig;
  sig.reserve(outs.size() + ins.size() + 2);
  sig.push_back(c[static_cast<std::size_t>(v)]);
  const auto mark = sig.size();
  for (int u : outs) sig.push_back(c[static_cast<std::size_t>(u)]);
  std::sort(sig.begin() + static_cast<std::ptrdiff_t>(mark), sig.end());
  sig.push_back(-1);
  const auto mark2 = sig.size();
  for (int u : ins) sig.push_back(c[static_cast<std::size_t>(u)]);
  std::sort(sig.begin() + static_cast<std::ptrdiff_t>(mark2), sig.end());
  return sig;
}

int count_colors(const Coloring& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// One joint refinement pass over one or two graphs. Returns false when the
// signature multisets of the two graphs differ.
bool refine_round(const Adjacency& a, Coloring& ca, const Adjacency* b, Coloring* cb) {
  std::vector<Signature> sa(ca.size());
  for (std::size_t v = 0; v < ca.size(); ++v) sa[v] = signature_of(a, ca, static_cast<int>(v));
  std::vector<Signature> sb;
  if (b != nullptr) {
    sb.resize(cb->size());
    for (std::size_t v = 0; v < cb->size(); ++v) sb[v] = signature_of(*b, *cb, static_cast<int>(v));
    auto sorted_a = sa;
    auto sorted_b = sb;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b) return false;
  }
  std::map<Signature, int> rank;
  for (const auto& s : sa) rank.emplace(s, 0);
  int next = 0;
  for (auto& [sig, r] : rank) r = next++;
  for (std::size_t v = 0; v < ca.size(); ++v) ca[v] = rank[sa[v]];
  if (b != nullptr) {
    for (std::size_t v = 0; v < cb->size(); ++v) (*cb)[v] = rank[sb[v]];
  }
  return true;
}

bool refine_to_fixpoint(const Adjacency& a, Coloring& ca, const Adjacency* b, Coloring* cb) {
  int colors = -1;
  while (true) {
    if (!refine_round(a, ca, b, cb)) return false;
    const int now = count_colors(ca);
    if (now == colors) return true;
    colors = now;
  }
}

// Smallest non-singleton colour class, lowest colour on ties; -1 if discrete.
int target_cell(const Coloring& c) {
  std::vector<int> sizes(static_cast<std::size_t>(count_colors(c)), 0);
  for (int x : c) ++sizes[static_cast<std::size_t>(x)];
  int best = -1;
  for (std::size_t col = 0; col < sizes.size(); ++col) {
    if (sizes[col] > 1 && (best < 0 || sizes[col] < sizes[static_cast<std::size_t>(best)])) {
      best = static_cast<int>(col);
    }
  }
  return best;
}

Coloring individualize(Coloring c, int v) {
  c[static_cast<std::size_t>(v)] = count_colors(c);
  return c;
}

struct BudgetExhausted {};

class Search {
 public:
  Search(const Digraph& d1, const Digraph& d2, std::uint64_t budget)
      : d1_(d1), d2_(d2), a1_(d1), a2_(d2), budget_(budget) {}

  std::optional<VertexMapping> run() {
    Coloring c1(static_cast<std::size_t>(d1_.size()), 0);
    Coloring c2(static_cast<std::size_t>(d2_.size()), 0);
    return descend(std::move(c1), std::move(c2));
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::optional<VertexMapping> descend(Coloring c1, Coloring c2) {
    if (++nodes_ > budget_) throw BudgetExhausted{};
    if (!refine_to_fixpoint(a1_, c1, &a2_, &c2)) return std::nullopt;
    const int cell = target_cell(c1);
    if (cell < 0) {
      std::vector<int> by_color(c2.size());
      for (std::size_t w = 0; w < c2.size(); ++w) by_color[static_cast<std::size_t>(c2[w])] = static_cast<int>(w);
      std::vector<int> perm(c1.size());
      for (std::size_t v = 0; v < c1.size(); ++v) perm[v] = by_color[static_cast<std::size_t>(c1[v])];
      VertexMapping f(std::move(perm));
      if (verify_mapping(d1_, d2_, f)) return f;
      return std::nullopt;
    }
    const auto pivot = static_cast<int>(std::find(c1.begin(), c1.end(), cell) - c1.begin());
    const Coloring fixed = individualize(c1, pivot);
    for (std::size_t w = 0; w < c2.size(); ++w) {
      if (c2[w] != cell) continue;
      if (auto found = descend(fixed, individualize(c2, static_cast<int>(w)))) return found;
    }
    return std::nullopt;
  }

  const Digraph& d1_;
  const Digraph& d2_;
  Adjacency a1_;
  Adjacency a2_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

std::string adjacency_string(const Digraph& d, const Coloring& position) {
  const auto n = static_cast<std::size_t>(d.size());
  std::string s(n * n, '0');
  for (int u = 0; u < d.size(); ++u) {
    for (int v = 0; v < d.size(); ++v) {
      if (d.has_edge(u, v)) {
        s[static_cast<std::size_t>(position[static_cast<std::size_t>(u)]) * n +
          static_cast<std::size_t>(position[static_cast<std::size_t>(v)])] = '1';
      }
    }
  }
  return s;
}

class Canonizer {
 public:
  Canonizer(const Digraph& d, std::uint64_t budget) : d_(d), adj_(d), budget_(budget) {}

  std::optional<CanonicalForm> run() {
    descend(Coloring(static_cast<std::size_t>(d_.size()), 0));
    if (!best_) return std::nullopt;
    return CanonicalForm{VertexMapping(*best_labeling_), *best_};
  }

 private:
  void descend(Coloring c) {
    if (++nodes_ > budget_) throw BudgetExhausted{};
    refine_to_fixpoint(adj_, c, nullptr, nullptr);
    const int cell = target_cell(c);
    if (cell < 0) {
      std::string s = adjacency_string(d_, c);
      if (!best_ || s < *best_) {
        best_ = std::move(s);
        best_labeling_ = c;
      }
      return;
    }
    for (std::size_t v = 0; v < c.size(); ++v) {
      if (c[v] == cell) descend(individualize(c, static_cast<int>(v)));
    }
  }

  const Digraph& d_;
  Adjacency adj_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::optional<std::string> best_;
  std::optional<std::vector<int>> best_labeling_;
};

}  // namespace

Coloring refine(const Digraph& d, Coloring initial) {
  if (static_cast<int>(initial.size()) != d.size()) {
    throw Error(ErrorCode::SizeMismatch, "colouring size differs from vertex count");
  }
  const Adjacency adj(d);
  refine_to_fixpoint(adj, initial, nullptr, nullptr);
  return initial;
}

bool is_equitable(const Digraph& d, const Coloring& colors) {
  const int k = count_colors(colors);
  const auto uk = static_cast<std::size_t>(k);
  // For each colour class: degree profile of its first member.
  std::vector<std::vector<int>> profile(uk);
  for (int u = 0; u < d.size(); ++u) {
    std::vector<int> counts(2 * uk, 0);
    for (int v = 0; v < d.size(); ++v) {
      if (d.has_edge(u, v)) ++counts[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])];
      if (d.has_edge(v, u)) ++counts[uk + static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])];
    }
    auto& p = profile[static_cast<std::size_t>(colors[static_cast<std::size_t>(u)])];
    if (p.empty()) {
      p = std::move(counts);
    } else if (p != counts) {
      return false;
    }
  }
  return true;
}

IsoResult are_isomorphic(const Digraph& d1, const Digraph& d2, std::uint64_t budget) {
  if (d1.size() != d2.size() || d1.edge_count() != d2.edge_count()) {
    return {IsoOutcome::NotIsomorphic, std::nullopt, 0};
  }
  Search search(d1, d2, budget);
  try {
    auto mapping = search.run();
    if (mapping) return {IsoOutcome::Isomorphic, std::move(mapping), search.nodes()};
    return {IsoOutcome::NotIsomorphic, std::nullopt, search.nodes()};
  } catch (const BudgetExhausted&) {
    return {IsoOutcome::BudgetExceeded, std::nullopt, budget};
  }
}

std::optional<CanonicalForm> canonical_form(const Digraph& d, std::uint64_t budget) {
  Canonizer canonizer(d, budget);
  try {
    return canonizer.run();
  } catch (const BudgetExhausted&) {
    return std::nullopt;
  }
}

}  // namespace antiflag
