#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace antiflag {

inline constexpr int kMaxFieldOrder = 4096;

/// Exact arithmetic in GF(p^e) through precomputed tables.
///
/// An element is a dense index in [0, q): the base-p evaluation of its
/// coefficient sequence (low degree first) as a polynomial over Z_p modulo
/// `modulus()`. Index 0 is the additive identity and index 1 the
/// multiplicative identity. Instances are immutable after construction.
class FiniteField {
 public:
  using Element = int;

  int p() const noexcept { return p_; }
  int e() const noexcept { return e_; }
  int q() const noexcept { return q_; }

  /// Monic modulus polynomial, coefficients low degree first (size e + 1).
  std::span<const int> modulus() const noexcept { return modulus_; }

  Element add(Element a, Element b) const { return add_[index(a, b)]; }
  Element mul(Element a, Element b) const { return mul_[index(a, b)]; }
  Element neg(Element a) const { return neg_[static_cast<std::size_t>(a)]; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  /// Multiplicative inverse; `a` must be nonzero.
  Element inv(Element a) const;

  /// Full tables, row-major q x q (add, mul) and length q (inv, index 0 unused).
  std::span<const std::uint16_t> add_table() const noexcept { return add_; }
  std::span<const std::uint16_t> mul_table() const noexcept { return mul_; }
  std::span<const std::uint16_t> inv_table() const noexcept { return inv_; }

  bool operator==(const FiniteField&) const = default;

 private:
  friend FiniteField make_field(int q);
  FiniteField() = default;

  std::size_t index(Element a, Element b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) +
           static_cast<std::size_t>(b);
  }

  int p_ = 0;
  int e_ = 0;
  int q_ = 0;
  std::vector<int> modulus_;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> neg_;
  std::vector<std::uint16_t> inv_;
};

/// (p, e) with q = p^e, or nullopt when q is not a prime power (q < 2 included).
std::optional<std::pair<int, int>> prime_power_decomposition(std::int64_t q);

/// Builds GF(q). The modulus is the lexicographically smallest monic
/// irreducible of degree e (coefficient sequences compared low degree first).
/// Throws NotPrimePower or TooLarge (q > kMaxFieldOrder).
FiniteField make_field(int q);

/// 0, 1, ..., q-1.
std::vector<FiniteField::Element> field_elements(const FiniteField& field);

}  // namespace antiflag
