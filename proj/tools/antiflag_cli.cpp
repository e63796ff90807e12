// antiflag: build anti-flag digraphs, verify DSRG parameters, list the
// catalog, compare digraphs up to isomorphism and evaluate spectra.
//
// Exit codes: 0 success, 1 negative answer (not a DSRG, not isomorphic,
// infeasible, parameter mismatch), 2 usage or library error, 3 budget hit.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "antiflag/catalog.hpp"
#include "antiflag/dsrg.hpp"
#include "antiflag/error.hpp"
#include "antiflag/families.hpp"
#include "antiflag/io.hpp"
#include "antiflag/iso.hpp"

namespace {

using namespace antiflag;

constexpr int kExitNegative = 1;
constexpr int kExitError = 2;
constexpr int kExitBudget = 3;

// DSRG_BUDGET, when set to a positive integer, replaces both the block
// budget of the constructions and the node budget of the isomorphism search.
std::optional<std::uint64_t> env_budget() {
  const char* raw = std::getenv("DSRG_BUDGET");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const auto value = std::stoull(raw, &used);
    if (used == std::string(raw).size() && value > 0) return value;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::InvalidArgument, "DSRG_BUDGET must be a positive integer");
}

struct BuildOptions {
  std::string family;
  int l = 0;
  int q = 0;
  int m = 1;
  int n = 0;
  std::string rule = "forward";
  std::string out;
  std::string edges;
  std::string structure_out;
  std::string structure_in;
};

FamilySpec family_from_flags(const BuildOptions& o) {
  auto need = [&](int value, const char* flag) {
    if (value <= 0) {
      throw Error(ErrorCode::InvalidArgument, "--family " + o.family + " needs " + flag);
    }
    return value;
  };
  const auto& f = o.family;
  if (f == "gdd") return family::Gdd{need(o.l, "--l"), need(o.q, "--q"), need(o.m, "--m")};
  if (f == "ap-pencils") return family::ApPencils{need(o.q, "--q"), need(o.l, "--l")};
  if (f == "transversal") return family::Transversal{need(o.q, "--q")};
  if (f == "partition") return family::Partition{need(o.q, "--q"), need(o.l, "--l")};
  if (f == "partition-spiked") return family::PartitionSpiked{need(o.q, "--q"), need(o.l, "--l")};
  if (f == "affine-resolvable") {
    const int q = need(o.q, "--q");
    const int n = need(o.n, "--n");
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "--n must be at least 2");
    std::int64_t m = 1;
    for (int i = 2; i < n; ++i) {
      m *= q;
      if (m > 1'000'000) throw Error(ErrorCode::OutOfBudget, "q^(n-2) too large");
    }
    return family::AffineResolvable{static_cast<int>(m), q, need(o.l, "--l")};
  }
  if (f == "fano-back") return family::TwoDesignBack{7, 7, 3, 3, 1};
  if (f == "fano-loopy") return family::TwoDesignBackLoopy{7, 7, 3, 3, 1};
  throw Error(ErrorCode::InvalidArgument, "unknown family '" + f + "'");
}

Digraph apply_rule(const IncidenceStructure& s, const std::string& rule) {
  if (rule == "forward") return build_antiflag_forward(s);
  if (rule == "backward") return build_antiflag_backward(s);
  if (rule == "backward-loopy") return build_antiflag_backward_loopy(s);
  if (rule == "spiked") return build_partition_spiked(s);
  throw Error(ErrorCode::InvalidArgument, "unknown rule '" + rule + "'");
}

void write_outputs(const BuildOptions& o, const Digraph& d, const IncidenceStructure* s) {
  if (!o.out.empty()) write_file(o.out, to_dgr(d));
  if (!o.edges.empty()) write_file(o.edges, to_edge_list(d));
  if (!o.structure_out.empty()) {
    if (s == nullptr) {
      throw Error(ErrorCode::InvalidArgument, "this construction has no single incidence structure");
    }
    write_file(o.structure_out, structure_to_json(*s));
  }
}

int cmd_build(const BuildOptions& o) {
  const auto budget = env_budget().value_or(kDefaultBlockBudget);
  if (!o.structure_in.empty()) {
    const auto s = structure_from_json(read_file(o.structure_in));
    const auto d = apply_rule(s, o.rule);
    write_outputs(o, d, &s);
    std::cout << to_string(verify_dsrg(d)) << " verified\n";
    return 0;
  }
  if (o.family.empty()) throw Error(ErrorCode::InvalidArgument, "--family or --structure-in is required");
  const auto instance = family_from_flags(o);
  const auto built = build_family(instance, budget);
  const auto expected = expected_params(instance);
  std::cout << "expected " << to_string(expected) << "\n";
  write_outputs(o, built.graph, built.structure ? &*built.structure : nullptr);
  const auto got = verify_dsrg(built.graph);
  if (got != expected) {
    std::cout << to_string(got) << " verified, differs from expected\n";
    return kExitNegative;
  }
  std::cout << to_string(got) << " verified\n";
  return 0;
}

int cmd_verify(const std::string& path) {
  const auto d = parse_digraph(read_file(path));
  try {
    std::cout << to_string(verify_dsrg(d)) << "\n";
    return 0;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::TooLarge || e.code() == ErrorCode::InvalidArgument) throw;
    std::cout << "not a DSRG: " << to_string(e.code()) << ": " << e.what();
    if (!e.witness().empty()) {
      std::cout << " (witness";
      for (auto x : e.witness()) std::cout << ' ' << x;
      std::cout << ')';
    }
    std::cout << "\n";
    return kExitNegative;
  }
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_catalog(int max_order, const std::string& families, std::optional<int> multiples,
                const std::string& csv) {
  CatalogOptions options;
  options.max_order = max_order;
  options.families = split_commas(families);
  options.multiples = multiples;
  options.block_budget = env_budget().value_or(kDefaultBlockBudget);
  const auto rows = build_catalog(options);
  if (csv == "-") {
    std::cout << catalog_csv(rows);
  } else {
    if (!csv.empty()) write_file(csv, catalog_csv(rows));
    std::cout << catalog_table(rows);
  }
  for (const auto& row : rows) {
    if (!row.formula_only && !row.verified) return kExitNegative;
  }
  return 0;
}

int cmd_iso(const std::string& path1, const std::string& path2) {
  const auto d1 = parse_digraph(read_file(path1));
  const auto d2 = parse_digraph(read_file(path2));
  const auto result = are_isomorphic(d1, d2, env_budget().value_or(kDefaultNodeBudget));
  switch (result.outcome) {
    case IsoOutcome::Isomorphic: {
      std::cout << "ISOMORPHIC\n";
      const auto& f = *result.mapping;
      for (int u = 0; u < f.size(); ++u) std::cout << u << " -> " << f(u) << "\n";
      return 0;
    }
    case IsoOutcome::NotIsomorphic:
      std::cout << "NOT ISOMORPHIC\n";
      return kExitNegative;
    case IsoOutcome::BudgetExceeded:
      std::cout << "BUDGET\n";
      return kExitBudget;
  }
  return kExitError;
}

int cmd_spectrum(const std::vector<std::int64_t>& values) {
  const ParamTuple p{values[0], values[1], values[2], values[3], values[4]};
  try {
    const auto s = spectrum(p);
    std::cout << "theta " << s.theta0 << ' ' << s.theta1 << ' ' << s.theta2 << " mult " << s.m0 << ' '
              << s.m1 << ' ' << s.m2 << "\n";
    return 0;
  } catch (const NotFeasibleError& e) {
    std::cout << "infeasible: " << e.detail() << "\n";
    return kExitNegative;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Anti-flag directed strongly regular graphs"};
  app.require_subcommand(1);

  BuildOptions build;
  auto* build_cmd = app.add_subcommand("build", "Build a family instance and verify it");
  build_cmd->add_option("--family", build.family,
                        "gdd | ap-pencils | transversal | partition | partition-spiked | "
                        "affine-resolvable | fano-back | fano-loopy");
  build_cmd->add_option("--l", build.l, "Number of groups, pencils or parallel classes");
  build_cmd->add_option("--q", build.q, "Group size or field order");
  build_cmd->add_option("--m", build.m, "Duval multiple (gdd only)")->capture_default_str();
  build_cmd->add_option("--n", build.n, "Dimension of the hyperplane design");
  build_cmd->add_option("--rule", build.rule, "forward | backward | backward-loopy | spiked (with --structure-in)")
      ->capture_default_str();
  build_cmd->add_option("--out", build.out, "Write the digraph in dgr/1 format");
  build_cmd->add_option("--edges", build.edges, "Write the digraph as an edge list");
  build_cmd->add_option("--structure-out", build.structure_out, "Write the incidence structure as JSON");
  build_cmd->add_option("--structure-in", build.structure_in, "Read the incidence structure from JSON");

  std::string verify_path;
  auto* verify_cmd = app.add_subcommand("verify", "Verify a digraph file (dgr/1 or edge list)");
  verify_cmd->add_option("path", verify_path)->required();

  int max_order = 110;
  std::string families;
  std::optional<int> multiples;
  std::string csv;
  auto* catalog_cmd = app.add_subcommand("catalog", "Enumerate, build and verify family instances");
  catalog_cmd->add_option("--max-order", max_order)->capture_default_str()->check(CLI::Range(1, kMaxVerifyOrder));
  catalog_cmd->add_option("--families", families, "Comma-separated family names (default: all)");
  catalog_cmd->add_option("--multiples", multiples, "Largest Duval multiple (default: unbounded)");
  catalog_cmd->add_option("--csv", csv, "Write CSV to this file ('-' for stdout instead of the table)");

  std::string iso1;
  std::string iso2;
  auto* iso_cmd = app.add_subcommand("iso", "Search for an isomorphism between two digraph files");
  iso_cmd->add_option("path1", iso1)->required();
  iso_cmd->add_option("path2", iso2)->required();

  std::vector<std::int64_t> params;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Eigenvalues implied by (v,k,t,lambda,mu)");
  spectrum_cmd->add_option("params", params, "v k t lambda mu")->required()->expected(5);

  CLI11_PARSE(app, argc, argv);

  try {
    if (build_cmd->parsed()) return cmd_build(build);
    if (verify_cmd->parsed()) return cmd_verify(verify_path);
    if (catalog_cmd->parsed()) return cmd_catalog(max_order, families, multiples, csv);
    if (iso_cmd->parsed()) return cmd_iso(iso1, iso2);
    if (spectrum_cmd->parsed()) return cmd_spectrum(params);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return e.code() == ErrorCode::OutOfBudget ? kExitBudget : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
