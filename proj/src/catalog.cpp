#include "antiflag/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "antiflag/error.hpp"
#include "antiflag/ffield.hpp"
#include "checked.hpp"

namespace antiflag {

namespace {

using i64 = std::int64_t;

bool is_prime_power(i64 q) { return prime_power_decomposition(q).has_value(); }

struct Builder {
  std::uint64_t budget;

  // The block budget is checked before the closed form, which may overflow.
  Construction operator()(const family::Gdd& f) const {
    auto s = build_gdd(f.l, f.q, budget);
    auto d = build_antiflag_forward(s);
    if (f.m == 1) return {std::move(s), std::move(d)};
    return {std::nullopt, duval_multiple(d, f.m)};
  }

  Construction operator()(const family::PgAntiflag& f) const {
    expected_params(f);
    if (!is_prime_power(f.kappa) || f.tau != f.rho - 1 || f.rho > f.kappa + 1) {
      throw Error(ErrorCode::InvalidArgument,
                  "pg-antiflag is only constructed as pg(q, l, l-1) from affine pencils");
    }
    auto s = restrict_parallel_classes(build_affine_plane(f.kappa), f.rho);
    auto d = build_antiflag_forward(s);
    return {std::move(s), std::move(d)};
  }

  Construction operator()(const family::ApPencils& f) const {
    expected_params(f);
    if (f.l > f.q + 1) {
      throw Error(ErrorCode::InvalidArgument, "AG(2, q) has only q + 1 pencils");
    }
    auto s = restrict_parallel_classes(build_affine_plane(f.q), f.l);
    auto d = build_antiflag_forward(s);
    return {std::move(s), std::move(d)};
  }

  Construction operator()(const family::Transversal& f) const {
    expected_params(f);
    auto s = restrict_parallel_classes(build_affine_plane(f.q), f.q);
    auto d = build_antiflag_forward(s);
    return {std::move(s), std::move(d)};
  }

  Construction operator()(const family::Partition& f) const {
    expected_params(f);
    auto s = build_partition_structure(f.q, f.l);
    auto d = build_antiflag_forward(s);
    return {std::move(s), std::move(d)};
  }

  Construction operator()(const family::PartitionSpiked& f) const {
    expected_params(f);
    auto s = build_partition_structure(f.q, f.l);
    auto d = build_partition_spiked(s);
    return {std::move(s), std::move(d)};
  }

  Construction operator()(const family::AffineResolvable& f) const {
    expected_params(f);
    if (!is_prime_power(f.s)) throw Error(ErrorCode::InvalidArgument, "s must be a prime power");
    int n = 2;
    i64 power = 1;
    while (power < f.m) {
      power = detail::checked_mul(power, f.s);
      ++n;
    }
    if (power != f.m) throw Error(ErrorCode::InvalidArgument, "m must be a power of s");
    auto s = restrict_parallel_classes(build_hyperplane_design(f.s, n), f.l);
    auto d = build_antiflag_forward(s);
    return {std::move(s), std::move(d)};
  }

  template <typename Design>
  IncidenceStructure design_for(const Design& f) const {
    expected_params(f);
    auto s = known_design(f.v, f.b, f.k, f.r, f.lambda);
    if (!s) throw Error(ErrorCode::InvalidArgument, "no built-in design with these parameters");
    return std::move(*s);
  }

  Construction operator()(const family::TwoDesignBack& f) const {
    auto s = design_for(f);
    auto d = build_antiflag_backward(s);
    return {std::move(s), std::move(d)};
  }

  Construction operator()(const family::TwoDesignBackLoopy& f) const {
    auto s = design_for(f);
    auto d = build_antiflag_backward_loopy(s);
    return {std::move(s), std::move(d)};
  }
};

// Smallest n >= 1 with q^n = v, or 0 if v is not a power of q.
int exact_log(i64 v, i64 q) {
  int n = 0;
  i64 power = 1;
  while (power < v) {
    if (power > v / q) return 0;
    power *= q;
    ++n;
  }
  return power == v ? n : 0;
}

class Generator {
 public:
  explicit Generator(const CatalogOptions& options) : options_(options) {}

  std::vector<CatalogRow> run() {
    const auto& names = options_.families.empty() ? catalog_families() : options_.families;
    for (const auto& name : names) {
      if (name == "gdd") gdd();
      else if (name == "ap-pencils") ap_pencils();
      else if (name == "transversal") transversal();
      else if (name == "partition") partition(false);
      else if (name == "partition-spiked") partition(true);
      else if (name == "affine-resolvable") affine_resolvable();
      else if (name == "two-design-back") two_design(false);
      else if (name == "two-design-back-loopy") two_design(true);
      else throw Error(ErrorCode::InvalidArgument, "unknown catalog family '" + name + "'");
    }
    std::stable_sort(rows_.begin(), rows_.end(), [](const CatalogRow& a, const CatalogRow& b) {
      if (a.params.v() != b.params.v()) return a.params.v() < b.params.v();
      return family_name(a.family) < family_name(b.family);
    });
    return std::move(rows_);
  }

 private:
  i64 max() const { return options_.max_order; }

  // Closed-form order of the instance, or nullopt on overflow / bad hypotheses.
  static std::optional<i64> order(const FamilySpec& f) {
    try {
      return expected_params(f).v();
    } catch (const Error&) {
      return std::nullopt;
    }
  }

  void add(const FamilySpec& f, bool formula_only) {
    const DsrgParams expected = expected_params(f);
    CatalogRow row{expected, f, family_params(f), false, formula_only, std::nullopt};
    if (formula_only) {
      row.family_params += " formula-only";
    } else {
      try {
        const DsrgParams got = verify_dsrg(build_family(f, options_.block_budget).graph);
        row.verified = got == expected;
        if (row.verified) row.params = got;
      } catch (const Error&) {
        row.verified = false;
      }
    }
    try {
      row.spectrum = spectrum(row.params);
    } catch (const Error&) {
    }
    rows_.push_back(std::move(row));
  }

  void gdd() {
    for (int q = 2;; ++q) {
      const auto smallest = order(family::Gdd{2, q, 1});
      if (!smallest || *smallest > max()) break;
      for (int l = 2;; ++l) {
        const auto v = order(family::Gdd{l, q, 1});
        if (!v || *v > max()) break;
        add(family::Gdd{l, q, 1}, false);
        for (int m = 2; *v * m <= max(); ++m) {
          if (options_.multiples && m > *options_.multiples) break;
          add(family::Gdd{l, q, m}, false);
        }
      }
    }
  }

  void ap_pencils() {
    for (int q = 2;; ++q) {
      const auto smallest = order(family::ApPencils{q, 2});
      if (!smallest || *smallest > max()) break;
      if (!is_prime_power(q)) continue;
      for (int l = 2;; ++l) {
        const auto v = order(family::ApPencils{q, l});
        if (!v || *v > max()) break;
        add(family::ApPencils{q, l}, l > q + 1);
      }
    }
  }

  void transversal() {
    for (int q = 2;; ++q) {
      const auto v = order(family::Transversal{q});
      if (!v || *v > max()) break;
      if (is_prime_power(q)) add(family::Transversal{q}, false);
    }
  }

  void partition(bool spiked) {
    for (int l = 3;; ++l) {
      const auto smallest = order(family::Partition{1, l});
      if (!smallest || *smallest > max()) break;
      for (int q = 1;; ++q) {
        const auto v = order(family::Partition{q, l});
        if (!v || *v > max()) break;
        if (spiked) {
          add(family::PartitionSpiked{q, l}, false);
        } else {
          add(family::Partition{q, l}, false);
        }
      }
    }
  }

  // Hyperplane designs with n >= 3; n = 2 is the affine plane, already
  // covered by ap-pencils.
  void affine_resolvable() {
    for (int q = 2;; ++q) {
      const auto smallest = order(family::AffineResolvable{q, q, 2});
      if (!smallest || *smallest > max()) break;
      if (!is_prime_power(q)) continue;
      i64 m = q;
      for (int n = 3;; ++n, m *= q) {
        const auto v = order(family::AffineResolvable{static_cast<int>(m), q, 2});
        if (!v || *v > max()) break;
        const i64 classes = (m * q * q - 1) / (q - 1);
        for (int l = 2; l <= classes; ++l) {
          const auto vl = order(family::AffineResolvable{static_cast<int>(m), q, l});
          if (!vl || *vl > max()) break;
          add(family::AffineResolvable{static_cast<int>(m), q, l}, false);
        }
      }
    }
  }

  void two_design(bool loopy) {
    std::vector<IncidenceStructure> designs;
    designs.push_back(build_fano());
    // Affine planes and hyperplane designs on P points give order P(P - 1).
    auto fits = [this](i64 points) { return points * (points - 1) <= max(); };
    for (int q = 2; fits(static_cast<i64>(q) * q); ++q) {
      if (!is_prime_power(q)) continue;
      i64 points = q;
      for (int n = 2; fits(points * q); ++n) {
        points *= q;
        designs.push_back(n == 2 ? build_affine_plane(q) : build_hyperplane_design(q, n));
      }
    }
    for (const auto& s : designs) {
      const auto p = verify_2design(s);
      if (p.b + p.lambda <= 2 * p.r) continue;
      const FamilySpec f = loopy ? FamilySpec(family::TwoDesignBackLoopy{p.v, p.b, p.k, p.r, p.lambda})
                                 : FamilySpec(family::TwoDesignBack{p.v, p.b, p.k, p.r, p.lambda});
      const auto v = order(f);
      if (v && *v <= max()) add(f, false);
    }
  }

  const CatalogOptions& options_;
  std::vector<CatalogRow> rows_;
};

}  // namespace

Construction build_family(const FamilySpec& f, std::uint64_t block_budget) {
  return std::visit(Builder{block_budget}, f);
}

std::optional<IncidenceStructure> known_design(int v, int b, int k, int r, int lambda) {
  const DesignParams wanted{v, b, k, r, lambda, std::nullopt, std::nullopt};
  auto matches = [&](const IncidenceStructure& s) {
    auto p = verify_2design(s);
    p.s.reset();
    p.m.reset();
    return p == wanted;
  };
  if (v == 7 && b == 7 && k == 3 && r == 3 && lambda == 1) return build_fano();
  if (k < 2 || v % k != 0) return std::nullopt;
  const int q = v / k;
  if (!is_prime_power(q)) return std::nullopt;
  const int n = exact_log(v, q);
  if (n < 2 || static_cast<std::uint64_t>(v) > kDefaultPointBudget) return std::nullopt;
  auto s = n == 2 && q <= 64 ? build_affine_plane(q) : build_hyperplane_design(q, n);
  if (!matches(s)) return std::nullopt;
  return s;
}

const std::vector<std::string>& catalog_families() {
  static const std::vector<std::string> kFamilies = {
      "gdd",       "ap-pencils",       "transversal",     "partition",
      "partition-spiked", "affine-resolvable", "two-design-back", "two-design-back-loopy"};
  return kFamilies;
}

std::vector<CatalogRow> build_catalog(const CatalogOptions& options) {
  if (options.max_order < 1 || options.max_order > kMaxVerifyOrder) {
    throw Error(ErrorCode::InvalidArgument,
                "max order must lie in 1.." + std::to_string(kMaxVerifyOrder));
  }
  if (options.multiples && *options.multiples < 1) {
    throw Error(ErrorCode::InvalidArgument, "multiples must be at least 1");
  }
  return Generator(options).run();
}

std::string catalog_csv(const std::vector<CatalogRow>& rows) {
  std::ostringstream out;
  out << "v,k,t,lambda,mu,family,family_params,verified,theta1,theta2,m1,m2\n";
  for (const auto& row : rows) {
    const auto& p = row.params;
    out << p.v() << ',' << p.k() << ',' << p.t() << ',' << p.lambda() << ',' << p.mu() << ','
        << family_name(row.family) << ',' << row.family_params << ','
        << (row.verified ? "true" : "false") << ',';
    if (row.spectrum) {
      out << row.spectrum->theta1 << ',' << row.spectrum->theta2 << ',' << row.spectrum->m1 << ','
          << row.spectrum->m2;
    } else {
      out << ",,,";
    }
    out << '\n';
  }
  return out.str();
}

std::string catalog_table(const std::vector<CatalogRow>& rows) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"(v,k,t,lambda,mu)", "family", "params", "verified", "spectrum"});
  for (const auto& row : rows) {
    std::string eigen = "-";
    if (row.spectrum) {
      const auto& s = *row.spectrum;
      eigen = std::to_string(s.theta0) + "^1 " + std::to_string(s.theta1) + "^" +
              std::to_string(s.m1) + " " + std::to_string(s.theta2) + "^" + std::to_string(s.m2);
    }
    cells.push_back({to_string(row.params), family_name(row.family), row.family_params,
                     row.formula_only ? "formula" : (row.verified ? "yes" : "NO"), eigen});
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  std::string out;
  for (const auto& line : cells) {
    std::string text;
    for (std::size_t c = 0; c < line.size(); ++c) {
      text += line[c];
      if (c + 1 < line.size()) text += std::string(width[c] - line[c].size() + 2, ' ');
    }
    out += text + "\n";
  }
  return out;
}

}  // namespace antiflag
