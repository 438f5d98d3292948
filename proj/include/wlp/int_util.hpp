#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace wlp {

// Checked 64-bit arithmetic. The inequality scans clear denominators in
// advance, so every comparison runs through these helpers; overflow is a
// hard error, never wraparound.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("checked_add: 64-bit overflow");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("checked_sub: 64-bit overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("checked_mul: 64-bit overflow");
  return r;
}

/// base^exp, exp >= 0, with overflow detection.
inline std::int64_t checked_pow(std::int64_t base, std::int64_t exp) {
  if (exp < 0) throw std::invalid_argument("checked_pow: negative exponent");
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

namespace detail {

/// Smallest k >= 0 with lo < 6*k*q < hi (q > 0), if any. The window is
/// narrower than the step 6q in every use here, so the k is also unique.
inline std::optional<std::int64_t> first_k_in_window(std::int64_t lo, std::int64_t hi,
                                                     std::int64_t q) {
  const std::int64_t step = checked_mul(6, q);
  const std::int64_t k = lo < 0 ? 0 : lo / step + 1;
  if (checked_mul(k, step) < hi) return k;
  return std::nullopt;
}

}  // namespace detail

}  // namespace wlp
