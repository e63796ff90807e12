#pragma once

#include <cstdint>

#include "antiflag/error.hpp"

namespace antiflag::detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "integer overflow in product");
  return out;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "integer overflow in sum");
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "integer overflow in difference");
  return out;
}

inline std::int64_t checked_pow(std::int64_t base, std::int64_t exp) {
  std::int64_t out = 1;
  for (std::int64_t i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

}  // namespace antiflag::detail
