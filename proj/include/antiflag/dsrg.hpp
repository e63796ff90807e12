#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "antiflag/digraph.hpp"
#include "antiflag/incidence.hpp"

namespace antiflag {

inline constexpr int kMaxVerifyOrder = 4096;

/// Raw (v, k, t, lambda, mu) tuple with no invariants attached.
struct ParamTuple {
  std::int64_t v = 0;
  std::int64_t k = 0;
  std::int64_t t = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;
  auto operator<=>(const ParamTuple&) const = default;
};

std::string to_string(const ParamTuple& p);

/// DSRG parameters. Construction enforces 0 <= t <= k < v, 0 <= lambda < k,
/// mu >= 0 and k(k + mu - lambda) = t + (v - 1) mu; InvalidParams otherwise.
class DsrgParams {
 public:
  DsrgParams(std::int64_t v, std::int64_t k, std::int64_t t, std::int64_t lambda, std::int64_t mu);
  explicit DsrgParams(const ParamTuple& p) : DsrgParams(p.v, p.k, p.t, p.lambda, p.mu) {}

  std::int64_t v() const noexcept { return p_.v; }
  std::int64_t k() const noexcept { return p_.k; }
  std::int64_t t() const noexcept { return p_.t; }
  std::int64_t lambda() const noexcept { return p_.lambda; }
  std::int64_t mu() const noexcept { return p_.mu; }
  const ParamTuple& tuple() const noexcept { return p_; }

  /// (mv, mk, mt, m lambda, m mu); Overflow on wrap.
  DsrgParams scaled(std::int64_t m) const;

  auto operator<=>(const DsrgParams&) const = default;

 private:
  ParamTuple p_;
};

std::string to_string(const DsrgParams& p);

/// Lists every DsrgParams invariant the tuple violates (empty when valid).
std::vector<std::string> param_violations(const ParamTuple& p);

struct Spectrum {
  std::int64_t theta0;
  std::int64_t theta1;
  std::int64_t theta2;
  std::int64_t m0;
  std::int64_t m1;
  std::int64_t m2;
  std::int64_t delta;
  bool operator==(const Spectrum&) const = default;
};

/// Integer eigenvalues and multiplicities implied by the parameters.
/// Throws NotFeasibleError with the first integrality/sign failure.
Spectrum spectrum(const ParamTuple& p);
inline Spectrum spectrum(const DsrgParams& p) { return spectrum(p.tuple()); }

struct FeasibilityCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct FeasibilityReport {
  std::vector<FeasibilityCheck> checks;
  std::optional<Spectrum> spectrum;
  bool passed() const;
};

/// Necessary conditions only; never a sufficiency claim.
FeasibilityReport feasibility(const ParamTuple& p);

// Anti-flag digraphs. Vertices are anti_flags(s) in canonical order and carry
// those anti-flags as labels. Empty when there are no anti-flags.

/// (p, B) -> (p', B') iff p in B'.
Digraph build_antiflag_forward(const IncidenceStructure& s);
/// (p, B) -> (p', B') iff p' in B.
Digraph build_antiflag_backward(const IncidenceStructure& s);
/// (p, B) -> (p', B') iff p' in B, or p = p' and B != B'. Requires a 2-design
/// with b + lambda > 2r (PreconditionFailed otherwise).
Digraph build_antiflag_backward_loopy(const IncidenceStructure& s);
/// (x, S) -> (x', S') iff x in S', or S = S' and x != x'. Requires a partition
/// structure whose blocks are its groups (NotPartitionStructure otherwise).
Digraph build_partition_spiked(const IncidenceStructure& s);

/// Reads (v, k, t, lambda, mu) off A^2 and checks the DSRG identity exactly.
/// Errors: NotRegular, NonConstantError, Degenerate, TooLarge, InvalidArgument.
DsrgParams verify_dsrg(const Digraph& d);

/// A (x) J_m: vertex u*m + i -> w*m + j iff u -> w. Requires a DSRG with
/// t = mu (TNotMu, NotDsrg) and m >= 1; the result is re-verified.
Digraph duval_multiple(const Digraph& d, int m);

}  // namespace antiflag
