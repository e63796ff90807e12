#include "antiflag/ffield.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "antiflag/error.hpp"

namespace antiflag {

namespace {

using Poly = std::vector<int>;  // coefficients low degree first

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int inverse_mod(int a, int p) {
  // p is prime and small; Fermat would also do.
  int t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    int quotient = r / new_r;
    t = std::exchange(new_t, t - quotient * new_t);
    r = std::exchange(new_r, r - quotient * new_r);
  }
  return t < 0 ? t + p : t;
}

// Remainder of f modulo g over Z_p; g must be nonzero.
Poly poly_mod(Poly f, const Poly& g, int p) {
  trim(f);
  const int lead_inv = inverse_mod(g.back(), p);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const int factor = f.back() * lead_inv % p;
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = ((f[shift + i] - factor * g[i]) % p + p) % p;
    }
    trim(f);
  }
  return f;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
  }
  trim(out);
  return out;
}

// Monic polynomial of the given degree whose lower coefficients are the
// base-p digits of `code`, c_0 being the most significant digit so that
// increasing codes walk the coefficient sequences lexicographically.
Poly monic_from_code(int code, int degree, int p) {
  Poly f(static_cast<std::size_t>(degree) + 1, 0);
  for (int i = degree - 1; i >= 0; --i) {
    f[static_cast<std::size_t>(i)] = code % p;
    code /= p;
  }
  f.back() = 1;
  return f;
}

int ipow(int base, int exp) {
  int r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

bool is_irreducible(const Poly& f, int p) {
  const int degree = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= degree / 2; ++d) {
    const int count = ipow(p, d);
    for (int code = 0; code < count; ++code) {
      if (poly_mod(f, monic_from_code(code, d, p), p).empty()) return false;
    }
  }
  return true;
}

Poly element_to_poly(int index, int p) {
  Poly f;
  while (index > 0) {
    f.push_back(index % p);
    index /= p;
  }
  return f;
}

int poly_to_element(const Poly& f, int p) {
  int index = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) index = index * p + *it;
  return index;
}

}  // namespace

std::optional<std::pair<int, int>> prime_power_decomposition(std::int64_t q) {
  if (q < 2) return std::nullopt;
  std::int64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;  // q itself is prime
  int e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return std::nullopt;
  return std::pair{static_cast<int>(p), e};
}

FiniteField make_field(int q) {
  const auto pe = prime_power_decomposition(q);
  if (!pe) {
    throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  }
  if (q > kMaxFieldOrder) {
    throw Error(ErrorCode::TooLarge, "field order " + std::to_string(q) + " exceeds " +
                                         std::to_string(kMaxFieldOrder));
  }
  const auto [p, e] = *pe;

  FiniteField field;
  field.p_ = p;
  field.e_ = e;
  field.q_ = q;

  const int candidates = ipow(p, e);
  for (int code = 0; code < candidates; ++code) {
    Poly f = monic_from_code(code, e, p);
    if (is_irreducible(f, p)) {
      field.modulus_ = std::move(f);
      break;
    }
  }

  const auto uq = static_cast<std::size_t>(q);
  field.add_.resize(uq * uq);
  field.neg_.resize(uq);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      int sum = 0;
      for (int x = a, y = b, place = 1; x > 0 || y > 0; x /= p, y /= p, place *= p) {
        sum += ((x % p + y % p) % p) * place;
      }
      field.add_[field.index(a, b)] = static_cast<std::uint16_t>(sum);
      if (sum == 0) field.neg_[static_cast<std::size_t>(a)] = static_cast<std::uint16_t>(b);
    }
  }

  auto slow_mul = [&](int a, int b) {
    return poly_to_element(
        poly_mod(poly_mul(element_to_poly(a, p), element_to_poly(b, p), p), field.modulus_, p),
        p);
  };

  // Discrete logarithms relative to the first primitive element.
  std::vector<int> exp_table(uq - 1);
  std::vector<int> log_table(uq, -1);
  for (int g = 1; g < q; ++g) {
    std::fill(log_table.begin(), log_table.end(), -1);
    int x = 1;
    int order = 0;
    bool primitive = true;
    for (int i = 0; i < q - 1; ++i) {
      if (log_table[static_cast<std::size_t>(x)] != -1) {
        primitive = false;
        break;
      }
      log_table[static_cast<std::size_t>(x)] = i;
      exp_table[static_cast<std::size_t>(i)] = x;
      x = slow_mul(x, g);
      ++order;
    }
    if (primitive && order == q - 1 && x == 1) break;
  }

  field.mul_.assign(uq * uq, 0);
  field.inv_.assign(uq, 0);
  for (int a = 1; a < q; ++a) {
    const int la = log_table[static_cast<std::size_t>(a)];
    for (int b = 1; b < q; ++b) {
      const int lb = log_table[static_cast<std::size_t>(b)];
      field.mul_[field.index(a, b)] =
          static_cast<std::uint16_t>(exp_table[static_cast<std::size_t>((la + lb) % (q - 1))]);
    }
    field.inv_[static_cast<std::size_t>(a)] =
        static_cast<std::uint16_t>(exp_table[static_cast<std::size_t>((q - 1 - la) % (q - 1))]);
  }
  return field;
}

FiniteField::Element FiniteField::inv(Element a) const {
  if (a <= 0 || a >= q_) {
    throw Error(ErrorCode::InvalidArgument, "inverse of zero or out-of-range element");
  }
  return inv_[static_cast<std::size_t>(a)];
}

std::vector<FiniteField::Element> field_elements(const FiniteField& field) {
  std::vector<FiniteField::Element> out(static_cast<std::size_t>(field.q()));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

}  // namespace antiflag
