#pragma once

#include <cstdint>
#include <span>

#include "chainmod/errors.hpp"

namespace chainmod::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw InvalidInput("integer overflow in addition");
  return out;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw InvalidInput("integer overflow in subtraction");
  return out;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw InvalidInput("integer overflow in multiplication");
  return out;
}

inline std::int64_t sum(std::span<const std::int64_t> xs) {
  std::int64_t acc = 0;
  for (auto x : xs) acc = add(acc, x);
  return acc;
}

}  // namespace chainmod::checked
