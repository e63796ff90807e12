#include "antiflag/families.hpp"

#include <algorithm>

#include "antiflag/error.hpp"
#include "checked.hpp"

namespace antiflag {

namespace {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_pow;
using detail::checked_sub;
using i64 = std::int64_t;

void require(bool condition, const char* what) {
  if (!condition) throw Error(ErrorCode::InvalidArgument, std::string("family hypothesis: ") + what);
}

// Shared by the affine-plane families: pg(q, l, l-1) anti-flags.
DsrgParams pencils(i64 q, i64 l) {
  const i64 t = checked_add(checked_sub(checked_mul(l, q), l), 1);
  return DsrgParams(checked_mul(checked_mul(l, checked_mul(q, q)), q - 1),
                    checked_mul(checked_mul(l, q), q - 1), t, checked_mul(l - 1, q - 1), t);
}

void check_design(i64 v, i64 b, i64 k, i64 r, i64 lambda) {
  require(v > k && k >= 2 && lambda >= 1, "2-design needs v > k >= 2 and lambda >= 1");
  require(checked_mul(r, k - 1) == checked_mul(lambda, v - 1), "r(k-1) = lambda(v-1)");
  require(checked_mul(b, k) == checked_mul(v, r), "bk = vr");
  require(b + lambda > 2 * r, "b + lambda > 2r");
}

struct Evaluate {
  DsrgParams operator()(const family::Gdd& f) const {
    require(f.l >= 2 && f.q >= 2 && f.m >= 1, "l >= 2, q >= 2, m >= 1");
    const i64 l = f.l, q = f.q, m = f.m;
    const i64 ql2 = checked_pow(q, l - 2);
    const i64 t = checked_mul(m, checked_mul(ql2, checked_add(checked_sub(checked_mul(l, q), l), 1)));
    return DsrgParams(checked_mul(m, checked_mul(checked_mul(l, checked_pow(q, l)), q - 1)),
                      checked_mul(m, checked_mul(checked_mul(l, checked_pow(q, l - 1)), q - 1)), t,
                      checked_mul(m, checked_mul(ql2, checked_mul(l - 1, q - 1))), t);
  }

  DsrgParams operator()(const family::PgAntiflag& f) const {
    const i64 kappa = f.kappa, rho = f.rho, tau = f.tau;
    require(kappa >= 2 && rho >= 2 && tau >= 1 && tau <= std::min(kappa, rho),
            "kappa >= 2, rho >= 2, 1 <= tau <= min(kappa, rho)");
    const i64 cross = checked_mul(kappa - 1, rho - 1);
    require(cross % tau == 0, "tau divides (kappa-1)(rho-1)");
    const i64 k = checked_mul(checked_mul(kappa, rho), cross) / tau;
    const i64 t = checked_sub(checked_mul(kappa, rho), tau);
    return DsrgParams(checked_mul(k, checked_add(1, cross / tau)), k, t, cross, t);
  }

  DsrgParams operator()(const family::ApPencils& f) const {
    require(f.q >= 2 && f.l >= 2, "q >= 2, l >= 2");
    return pencils(f.q, f.l);
  }

  DsrgParams operator()(const family::Transversal& f) const {
    require(f.q >= 2, "q >= 2");
    const i64 q = f.q;
    const i64 t = checked_add(checked_sub(checked_mul(q, q), q), 1);
    return DsrgParams(checked_mul(checked_pow(q, 3), q - 1), checked_mul(checked_mul(q, q), q - 1), t,
                      checked_mul(q - 1, q - 1), t);
  }

  DsrgParams operator()(const family::Partition& f) const {
    require(f.q >= 1 && f.l >= 3, "q >= 1, l >= 3");
    const i64 q = f.q, l = f.l;
    return DsrgParams(checked_mul(checked_mul(q, l), l - 1), checked_mul(q, l - 1), q, 0, q);
  }

  DsrgParams operator()(const family::PartitionSpiked& f) const {
    require(f.q >= 1 && f.l >= 3, "q >= 1, l >= 3");
    const i64 q = f.q, l = f.l;
    return DsrgParams(checked_mul(checked_mul(q, l), l - 1),
                      checked_sub(checked_mul(checked_mul(2, q), l - 1), 1),
                      checked_sub(checked_mul(q, l), 1), checked_sub(checked_mul(q, l), 2),
                      checked_mul(2, q));
  }

  DsrgParams operator()(const family::AffineResolvable& f) const {
    require(f.m >= 1 && f.s >= 2 && f.l >= 2, "m >= 1, s >= 2, l >= 2");
    const i64 m = f.m, s = f.s, l = f.l;
    const i64 t = checked_mul(m, checked_add(checked_sub(checked_mul(l, s), l), 1));
    return DsrgParams(checked_mul(checked_mul(checked_mul(m, l), checked_mul(s, s)), s - 1),
                      checked_mul(checked_mul(checked_mul(m, l), s), s - 1), t,
                      checked_mul(m, checked_mul(l - 1, s - 1)), t);
  }

  DsrgParams operator()(const family::TwoDesignBack& f) const {
    check_design(f.v, f.b, f.k, f.r, f.lambda);
    const i64 nonblocks = static_cast<i64>(f.b) - f.r;
    const i64 t = checked_mul(f.k, static_cast<i64>(f.r) - f.lambda);
    return DsrgParams(checked_mul(f.v, nonblocks), checked_mul(f.k, nonblocks), t,
                      checked_mul(f.k - 1, static_cast<i64>(f.r) - f.lambda), t);
  }

  DsrgParams operator()(const family::TwoDesignBackLoopy& f) const {
    check_design(f.v, f.b, f.k, f.r, f.lambda);
    const i64 nonblocks = static_cast<i64>(f.b) - f.r;
    const i64 base = checked_mul(f.k, static_cast<i64>(f.r) - f.lambda);
    return DsrgParams(checked_mul(f.v, nonblocks),
                      checked_add(checked_mul(f.k, nonblocks), nonblocks - 1),
                      checked_add(base, nonblocks - 1), checked_add(base, nonblocks - 2),
                      checked_mul(f.k + 1, static_cast<i64>(f.r) - f.lambda));
  }
};

std::string kv(const char* key, int value) { return std::string(key) + "=" + std::to_string(value); }

struct Describe {
  std::string operator()(const family::Gdd& f) const {
    return kv("l", f.l) + " " + kv("q", f.q) + " " + kv("m", f.m);
  }
  std::string operator()(const family::PgAntiflag& f) const {
    return kv("kappa", f.kappa) + " " + kv("rho", f.rho) + " " + kv("tau", f.tau);
  }
  std::string operator()(const family::ApPencils& f) const {
    return kv("q", f.q) + " " + kv("l", f.l);
  }
  std::string operator()(const family::Transversal& f) const { return kv("q", f.q); }
  std::string operator()(const family::Partition& f) const {
    return kv("q", f.q) + " " + kv("l", f.l);
  }
  std::string operator()(const family::PartitionSpiked& f) const {
    return kv("q", f.q) + " " + kv("l", f.l);
  }
  std::string operator()(const family::AffineResolvable& f) const {
    return kv("m", f.m) + " " + kv("s", f.s) + " " + kv("l", f.l);
  }
  template <typename Design>
  std::string operator()(const Design& f) const {
    return kv("v", f.v) + " " + kv("b", f.b) + " " + kv("k", f.k) + " " + kv("r", f.r) + " " +
           kv("lambda", f.lambda);
  }
};

}  // namespace

DsrgParams expected_params(const FamilySpec& f) { return std::visit(Evaluate{}, f); }

std::string family_name(const FamilySpec& f) {
  static constexpr const char* kNames[] = {
      "gdd",       "pg-antiflag",       "ap-pencils",      "transversal",
      "partition", "partition-spiked",  "affine-resolvable", "two-design-back",
      "two-design-back-loopy",
  };
  return kNames[f.index()];
}

std::string family_params(const FamilySpec& f) { return std::visit(Describe{}, f); }

}  // namespace antiflag
