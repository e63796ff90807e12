#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "antiflag/dsrg.hpp"
#include "antiflag/families.hpp"
#include "antiflag/incidence.hpp"

namespace antiflag {

/// Incidence structure behind a family instance (absent for Duval multiples
/// with m > 1) and the anti-flag digraph built from it.
struct Construction {
  std::optional<IncidenceStructure> structure;
  Digraph graph;
};

/// Builds the concrete digraph for a family instance.
///   Gdd: forward rule on build_gdd, then duval_multiple when m > 1.
///   PgAntiflag: only pg(q, l, l-1) with q a prime power (affine pencils).
///   ApPencils / Transversal: forward rule on AG(2, q) cut to l (or q) pencils.
///   Partition / PartitionSpiked: build_partition_structure with the
///     forward or spiked rule.
///   AffineResolvable: hyperplane design over GF(s) with m = s^(n-2).
///   TwoDesignBack(Loopy): the Fano plane, an affine plane or a hyperplane
///     design whose parameters match.
/// InvalidArgument when no construction is known for the parameters.
Construction build_family(const FamilySpec& f, std::uint64_t block_budget = kDefaultBlockBudget);

/// Structure for the 2-design parameters, if one of the built-in designs has
/// them.
std::optional<IncidenceStructure> known_design(int v, int b, int k, int r, int lambda);

/// Catalog family names, in the order rows are generated.
const std::vector<std::string>& catalog_families();

struct CatalogOptions {
  int max_order = 110;
  /// Empty means every catalog family.
  std::vector<std::string> families;
  /// Largest Duval multiple applied to gdd rows; nullopt means unbounded
  /// (limited by max_order only).
  std::optional<int> multiples;
  std::uint64_t block_budget = kDefaultBlockBudget;
};

struct CatalogRow {
  DsrgParams params;
  FamilySpec family;
  /// family_params(family), plus " formula-only" for rows with no construction.
  std::string family_params;
  bool verified = false;
  bool formula_only = false;
  std::optional<Spectrum> spectrum;
};

/// Rows are sorted by (v, family name) and otherwise kept in generation
/// order. A constructed row whose verified parameters differ from the
/// closed form, or whose build fails, is reported with verified = false.
std::vector<CatalogRow> build_catalog(const CatalogOptions& options);

/// Header v,k,t,lambda,mu,family,family_params,verified,theta1,theta2,m1,m2.
std::string catalog_csv(const std::vector<CatalogRow>& rows);
/// Aligned plain-text rendering of the same rows.
std::string catalog_table(const std::vector<CatalogRow>& rows);

}  // namespace antiflag
