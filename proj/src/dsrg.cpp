#include "antiflag/dsrg.hpp"

#include <algorithm>
#include <cmath>
#include <variant>

#include "antiflag/error.hpp"
#include "checked.hpp"

namespace antiflag {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;

std::string to_string(const ParamTuple& p) {
  return "(" + std::to_string(p.v) + "," + std::to_string(p.k) + "," + std::to_string(p.t) + "," +
         std::to_string(p.lambda) + "," + std::to_string(p.mu) + ")";
}

std::string to_string(const DsrgParams& p) { return to_string(p.tuple()); }

std::vector<std::string> param_violations(const ParamTuple& p) {
  std::vector<std::string> out;
  if (!(0 <= p.t && p.t <= p.k && p.k < p.v)) out.emplace_back("0 <= t <= k < v");
  if (!(0 <= p.lambda && p.lambda < p.k)) out.emplace_back("0 <= lambda < k");
  if (p.mu < 0) out.emplace_back("mu >= 0");
  try {
    const auto lhs = checked_mul(p.k, checked_add(p.k, checked_sub(p.mu, p.lambda)));
    const auto rhs = checked_add(p.t, checked_mul(p.v - 1, p.mu));
    if (lhs != rhs) out.emplace_back("k(k+mu-lambda) = t+(v-1)mu");
  } catch (const Error&) {
    out.emplace_back("k(k+mu-lambda) = t+(v-1)mu (overflow)");
  }
  return out;
}

DsrgParams::DsrgParams(std::int64_t v, std::int64_t k, std::int64_t t, std::int64_t lambda,
                       std::int64_t mu)
    : p_{v, k, t, lambda, mu} {
  // An identity too large for 64 bits is an Overflow, not a violation.
  checked_mul(k, checked_add(k, checked_sub(mu, lambda)));
  checked_add(t, checked_mul(v - 1, mu));
  const auto violations = param_violations(p_);
  if (!violations.empty()) {
    throw Error(ErrorCode::InvalidParams, to_string(p_) + " violates " + violations.front());
  }
}

DsrgParams DsrgParams::scaled(std::int64_t m) const {
  return DsrgParams(checked_mul(m, p_.v), checked_mul(m, p_.k), checked_mul(m, p_.t),
                    checked_mul(m, p_.lambda), checked_mul(m, p_.mu));
}

namespace {

struct SpectrumFailure {
  Infeasibility reason;
  std::string detail;
};

std::int64_t exact_sqrt(std::int64_t x) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

// Staged computation so feasibility() can report which stage failed.
std::variant<Spectrum, SpectrumFailure> compute_spectrum(const ParamTuple& p) {
  const auto gap = checked_sub(p.mu, p.lambda);
  const auto delta_sq = checked_add(checked_mul(gap, gap), checked_mul(4, checked_sub(p.t, p.mu)));
  const std::string sq = "delta^2=" + std::to_string(delta_sq);
  if (delta_sq < 0) return SpectrumFailure{Infeasibility::DeltaNotInteger, sq};
  const auto delta = exact_sqrt(delta_sq);
  if (delta * delta != delta_sq) return SpectrumFailure{Infeasibility::DeltaNotInteger, sq};
  if (delta == 0) return SpectrumFailure{Infeasibility::DeltaNotPositive, sq};

  const auto twice_theta1 = checked_add(checked_sub(p.lambda, p.mu), delta);
  if (twice_theta1 % 2 != 0) {
    return SpectrumFailure{Infeasibility::HalvesNotInteger,
                           "lambda-mu+delta=" + std::to_string(twice_theta1)};
  }
  const auto theta1 = twice_theta1 / 2;
  const auto theta2 = theta1 - delta;

  const auto m1_num = -checked_add(p.k, checked_mul(theta2, p.v - 1));
  const auto m2_num = checked_add(p.k, checked_mul(theta1, p.v - 1));
  if (m1_num % delta != 0 || m2_num % delta != 0) {
    return SpectrumFailure{Infeasibility::MultiplicityNotInteger,
                           "m1=" + std::to_string(m1_num) + "/" + std::to_string(delta) +
                               " m2=" + std::to_string(m2_num) + "/" + std::to_string(delta)};
  }
  const auto m1 = m1_num / delta;
  const auto m2 = m2_num / delta;
  if (m1 < 0 || m2 < 0) {
    return SpectrumFailure{Infeasibility::MultiplicityNegative,
                           "m1=" + std::to_string(m1) + " m2=" + std::to_string(m2)};
  }
  return Spectrum{p.k, theta1, theta2, 1, m1, m2, delta};
}

}  // namespace

Spectrum spectrum(const ParamTuple& p) {
  if (p.v < 2) throw Error(ErrorCode::InvalidParams, "spectrum needs v >= 2");
  auto result = compute_spectrum(p);
  if (auto* failure = std::get_if<SpectrumFailure>(&result)) {
    throw NotFeasibleError(failure->reason, failure->detail);
  }
  return std::get<Spectrum>(result);
}

bool FeasibilityReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

FeasibilityReport feasibility(const ParamTuple& p) {
  FeasibilityReport report;
  const auto violations = param_violations(p);
  auto violated = [&](std::string_view name) {
    for (const auto& v : violations) {
      if (v.starts_with(name)) return true;
    }
    return false;
  };
  for (std::string_view name : {"0 <= t <= k < v", "0 <= lambda < k", "mu >= 0",
                                "k(k+mu-lambda) = t+(v-1)mu"}) {
    report.checks.push_back({std::string(name), !violated(name), ""});
  }

  if (p.v < 2) {
    report.checks.push_back({"spectrum", false, "v < 2"});
    return report;
  }
  std::variant<Spectrum, SpectrumFailure> result;
  try {
    result = compute_spectrum(p);
  } catch (const Error& e) {
    report.checks.push_back({"spectrum", false, e.what()});
    return report;
  }

  static constexpr std::pair<Infeasibility, const char*> kStages[] = {
      {Infeasibility::DeltaNotInteger, "delta integer"},
      {Infeasibility::DeltaNotPositive, "delta positive"},
      {Infeasibility::HalvesNotInteger, "theta1, theta2 integral"},
      {Infeasibility::MultiplicityNotInteger, "multiplicities integral"},
      {Infeasibility::MultiplicityNegative, "multiplicities nonnegative"},
  };
  const auto* failure = std::get_if<SpectrumFailure>(&result);
  for (const auto& [reason, name] : kStages) {
    if (failure && failure->reason == reason) {
      report.checks.push_back({name, false, failure->detail});
      return report;
    }
    report.checks.push_back({name, true, ""});
  }
  report.spectrum = std::get<Spectrum>(result);
  return report;
}

namespace {

using Mask = std::vector<std::uint64_t>;

void set_bit(Mask& m, int i) {
  m[static_cast<std::size_t>(i) / 64] |= std::uint64_t{1} << (static_cast<unsigned>(i) % 64);
}
void clear_bit(Mask& m, int i) {
  m[static_cast<std::size_t>(i) / 64] &= ~(std::uint64_t{1} << (static_cast<unsigned>(i) % 64));
}
void or_into(Mask& dst, const Mask& src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] |= src[i];
}

// Anti-flag vertices plus, for each point and each block, the set of
// vertices carrying it.
struct AntiFlagIndex {
  std::vector<AntiFlag> vertices;
  std::vector<Mask> by_point;
  std::vector<Mask> by_block;
  std::vector<std::vector<int>> through;  // blocks containing each point
  std::size_t words = 0;
};

AntiFlagIndex index_anti_flags(const IncidenceStructure& s) {
  std::uint64_t count = 0;
  for (const Block& b : s.blocks()) count += static_cast<std::uint64_t>(s.num_points()) - b.size();
  if (count == 0) throw Error(ErrorCode::Empty, "structure has no anti-flags");
  if (count > static_cast<std::uint64_t>(kMaxDigraphOrder)) {
    throw Error(ErrorCode::TooLarge,
                std::to_string(count) + " anti-flags exceed the digraph order cap");
  }
  AntiFlagIndex idx;
  idx.vertices = anti_flags(s);
  idx.words = (idx.vertices.size() + 63) / 64;
  idx.by_point.assign(static_cast<std::size_t>(s.num_points()), Mask(idx.words, 0));
  idx.by_block.assign(static_cast<std::size_t>(s.num_blocks()), Mask(idx.words, 0));
  idx.through.resize(static_cast<std::size_t>(s.num_points()));
  for (int b = 0; b < s.num_blocks(); ++b) {
    for (int p : s.block(b)) idx.through[static_cast<std::size_t>(p)].push_back(b);
  }
  for (std::size_t i = 0; i < idx.vertices.size(); ++i) {
    set_bit(idx.by_point[static_cast<std::size_t>(idx.vertices[i].point)], static_cast<int>(i));
    set_bit(idx.by_block[static_cast<std::size_t>(idx.vertices[i].block)], static_cast<int>(i));
  }
  return idx;
}

// Builds the digraph whose row for each vertex is produced by `row_of`.
template <typename RowFn>
Digraph assemble(AntiFlagIndex idx, RowFn row_of) {
  Digraph d(static_cast<int>(idx.vertices.size()));
  for (std::size_t u = 0; u < idx.vertices.size(); ++u) {
    Mask row(idx.words, 0);
    row_of(idx, static_cast<int>(u), row);
    d.or_row(static_cast<int>(u), row);
  }
  d.set_vertex_labels(std::move(idx.vertices));
  return d;
}

}  // namespace

Digraph build_antiflag_forward(const IncidenceStructure& s) {
  return assemble(index_anti_flags(s), [&](const AntiFlagIndex& idx, int u, Mask& row) {
    // p in B' for every block B' through p; never B itself since p is not in B.
    const int p = idx.vertices[static_cast<std::size_t>(u)].point;
    for (int b : idx.through[static_cast<std::size_t>(p)]) {
      or_into(row, idx.by_block[static_cast<std::size_t>(b)]);
    }
  });
}

Digraph build_antiflag_backward(const IncidenceStructure& s) {
  return assemble(index_anti_flags(s), [&](const AntiFlagIndex& idx, int u, Mask& row) {
    const int b = idx.vertices[static_cast<std::size_t>(u)].block;
    for (int p : s.block(b)) or_into(row, idx.by_point[static_cast<std::size_t>(p)]);
  });
}

Digraph build_antiflag_backward_loopy(const IncidenceStructure& s) {
  DesignParams design{};
  try {
    design = verify_2design(s);
  } catch (const Error& e) {
    throw Error(ErrorCode::PreconditionFailed, std::string("not a 2-design: ") + e.what());
  }
  if (!(design.b + design.lambda > 2 * design.r)) {
    throw Error(ErrorCode::PreconditionFailed, "design violates b + lambda > 2r");
  }
  return assemble(index_anti_flags(s), [&](const AntiFlagIndex& idx, int u, Mask& row) {
    const AntiFlag& self = idx.vertices[static_cast<std::size_t>(u)];
    for (int p : s.block(self.block)) or_into(row, idx.by_point[static_cast<std::size_t>(p)]);
    Mask same_point = idx.by_point[static_cast<std::size_t>(self.point)];
    clear_bit(same_point, u);
    or_into(row, same_point);
  });
}

Digraph build_partition_spiked(const IncidenceStructure& s) {
  bool ok = s.groups().has_value() && s.groups()->size() == s.blocks().size();
  if (ok) {
    for (std::size_t i = 0; i < s.blocks().size() && ok; ++i) ok = (*s.groups())[i] == s.blocks()[i];
  }
  if (!ok) {
    throw Error(ErrorCode::NotPartitionStructure, "blocks must coincide with the groups");
  }
  return assemble(index_anti_flags(s), [&](const AntiFlagIndex& idx, int u, Mask& row) {
    const AntiFlag& self = idx.vertices[static_cast<std::size_t>(u)];
    for (int b : idx.through[static_cast<std::size_t>(self.point)]) {
      or_into(row, idx.by_block[static_cast<std::size_t>(b)]);
    }
    Mask same_block = idx.by_block[static_cast<std::size_t>(self.block)];
    clear_bit(same_block, u);
    or_into(row, same_block);
  });
}

DsrgParams verify_dsrg(const Digraph& d) {
  const int n = d.size();
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "verify_dsrg needs at least 2 vertices");
  if (n > kMaxVerifyOrder) {
    throw Error(ErrorCode::TooLarge, "verification capped at " + std::to_string(kMaxVerifyOrder) +
                                         " vertices");
  }
  const Digraph t = d.transposed();
  const int k = d.out_degree(0);
  for (int u = 0; u < n; ++u) {
    if (d.out_degree(u) != k) {
      throw Error(ErrorCode::NotRegular, "vertex " + std::to_string(u) + " has out-degree " +
                                             std::to_string(d.out_degree(u)) + ", vertex 0 has " +
                                             std::to_string(k),
                  {u});
    }
    if (t.out_degree(u) != k) {
      throw Error(ErrorCode::NotRegular, "vertex " + std::to_string(u) + " has in-degree " +
                                             std::to_string(t.out_degree(u)) + ", expected " +
                                             std::to_string(k),
                  {u});
    }
  }
  if (k == 0 || k == n - 1) {
    throw Error(ErrorCode::Degenerate, k == 0 ? "digraph has no edges" : "digraph is complete");
  }

  std::optional<std::int64_t> tt;
  std::optional<std::int64_t> lambda;
  std::optional<std::int64_t> mu;
  auto pin = [](std::optional<std::int64_t>& slot, std::int64_t value, Quantity which, int u, int w) {
    if (!slot) {
      slot = value;
    } else if (*slot != value) {
      throw NonConstantError(which,
                             std::string(to_string(which)) + " not constant: A^2[" +
                                 std::to_string(u) + "][" + std::to_string(w) + "] = " +
                                 std::to_string(value) + ", earlier " + std::to_string(*slot),
                             {u, w});
    }
  };
  for (int u = 0; u < n; ++u) {
    const auto row = d.row(u);
    for (int w = 0; w < n; ++w) {
      const std::int64_t paths = popcount_and(row, t.row(w));
      if (u == w) {
        pin(tt, paths, Quantity::T, u, w);
      } else if (d.has_edge(u, w)) {
        pin(lambda, paths, Quantity::Lambda, u, w);
      } else {
        pin(mu, paths, Quantity::Mu, u, w);
      }
    }
  }
  return DsrgParams(n, k, *tt, *lambda, *mu);
}

Digraph duval_multiple(const Digraph& d, int m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "multiplicity must be >= 1");
  std::optional<DsrgParams> params;
  try {
    params = verify_dsrg(d);
  } catch (const Error& e) {
    throw Error(ErrorCode::NotDsrg, std::string("input is not a DSRG: ") + e.what());
  }
  if (params->t() != params->mu()) {
    throw Error(ErrorCode::TNotMu, "t = " + std::to_string(params->t()) + " differs from mu = " +
                                       std::to_string(params->mu()));
  }
  const std::int64_t order = static_cast<std::int64_t>(d.size()) * m;
  if (order > kMaxDigraphOrder) {
    throw Error(ErrorCode::TooLarge, "multiple has " + std::to_string(order) + " vertices");
  }
  Digraph out(static_cast<int>(order));
  Mask row(out.words_per_row(), 0);
  for (int u = 0; u < d.size(); ++u) {
    std::fill(row.begin(), row.end(), 0);
    for (int w = 0; w < d.size(); ++w) {
      if (!d.has_edge(u, w)) continue;
      for (int j = 0; j < m; ++j) set_bit(row, w * m + j);
    }
    for (int i = 0; i < m; ++i) out.or_row(u * m + i, row);
  }
  if (out.size() <= kMaxVerifyOrder) {
    const DsrgParams got = verify_dsrg(out);
    if (got != params->scaled(m)) {
      throw Error(ErrorCode::NotDsrg, "multiple verified as " + to_string(got) + ", expected " +
                                          to_string(params->scaled(m)));
    }
  }
  return out;
}

}  // namespace antiflag
