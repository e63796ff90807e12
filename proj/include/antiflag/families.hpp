#pragma once

#include <string>
#include <variant>

#include "antiflag/dsrg.hpp"

namespace antiflag {

namespace family {

/// Anti-flags of GD(l, q^{l-2}, q; ql), blown up m times.
struct Gdd {
  int l;
  int q;
  int m = 1;
  auto operator<=>(const Gdd&) const = default;
};
/// Anti-flags of an arbitrary partial geometry pg(kappa, rho, tau).
struct PgAntiflag {
  int kappa;
  int rho;
  int tau;
  auto operator<=>(const PgAntiflag&) const = default;
};
/// l pencils of the affine plane of order q, i.e. pg(q, l, l-1).
struct ApPencils {
  int q;
  int l;
  auto operator<=>(const ApPencils&) const = default;
};
/// All q pencils kept as blocks, TD(q, q) = pg(q, q, q-1).
struct Transversal {
  int q;
  auto operator<=>(const Transversal&) const = default;
};
struct Partition {
  int q;
  int l;
  auto operator<=>(const Partition&) const = default;
};
struct PartitionSpiked {
  int q;
  int l;
  auto operator<=>(const PartitionSpiked&) const = default;
};
/// l parallel classes of an affine resolvable design with v = m s^2.
struct AffineResolvable {
  int m;
  int s;
  int l;
  auto operator<=>(const AffineResolvable&) const = default;
};
/// Backward rule on a 2-(v, b, k, r, lambda) design.
struct TwoDesignBack {
  int v;
  int b;
  int k;
  int r;
  int lambda;
  auto operator<=>(const TwoDesignBack&) const = default;
};
/// Backward rule plus same-point edges on a 2-(v, b, k, r, lambda) design.
struct TwoDesignBackLoopy {
  int v;
  int b;
  int k;
  int r;
  int lambda;
  auto operator<=>(const TwoDesignBackLoopy&) const = default;
};

}  // namespace family

using FamilySpec =
    std::variant<family::Gdd, family::PgAntiflag, family::ApPencils, family::Transversal,
                 family::Partition, family::PartitionSpiked, family::AffineResolvable,
                 family::TwoDesignBack, family::TwoDesignBackLoopy>;

/// Closed-form parameters of the family in checked 64-bit arithmetic.
/// InvalidArgument when the family's hypotheses fail, Overflow on wrap.
DsrgParams expected_params(const FamilySpec& f);

/// Short CLI/CSV name, e.g. "gdd", "ap-pencils".
std::string family_name(const FamilySpec& f);
/// Space-separated key=value list, e.g. "l=2 q=3 m=1".
std::string family_params(const FamilySpec& f);

}  // namespace antiflag
