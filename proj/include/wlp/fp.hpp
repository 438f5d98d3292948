#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wlp {

/// Deterministic primality test by trial division. Meant for the small
/// moduli and exceptional-prime scans this library deals in, not for
/// cryptographic sizes.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t f = 5; f * f <= n; f += 6)
    if (n % f == 0 || n % (f + 2) == 0) return false;
  return true;
}

/// A verified prime modulus p with 2 <= p < 2^31, plus exact residue
/// arithmetic mod p. Residues live in [0, p); products fit in 64 bits and
/// every multiply-add is reduced immediately. Reduction is Barrett-style
/// (shift and multiply against a precomputed reciprocal), exact for all
/// inputs below 2^62.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::int64_t p) {
    if (p < 2 || p >= (std::int64_t{1} << 31))
      throw std::invalid_argument("PrimeModulus: need 2 <= p < 2^31, got " + std::to_string(p));
    if (!is_prime(static_cast<std::uint64_t>(p)))
      throw std::invalid_argument("PrimeModulus: " + std::to_string(p) + " is not prime");
    p_ = static_cast<std::uint32_t>(p);
    magic_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) / p_);
  }

  std::uint32_t value() const { return p_; }

  /// Reduce x mod p; exact for 0 <= x < 2^62 (covers any sum of a residue
  /// and a product of residues).
  std::uint32_t reduce(std::uint64_t x) const {
    const std::uint64_t q =
        static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * magic_) >> 64);
    std::uint64_t r = x - q * p_;
    if (r >= p_) r -= p_;
    return static_cast<std::uint32_t>(r);
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  }

  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : static_cast<std::uint32_t>(a + std::uint64_t{p_} - b);
  }

  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return reduce(std::uint64_t{a} * b);
  }

  /// acc + x*y mod p in one reduction.
  std::uint32_t mul_add(std::uint32_t acc, std::uint32_t x, std::uint32_t y) const {
    return reduce(acc + std::uint64_t{x} * y);
  }

  std::uint32_t pow(std::uint32_t base, std::uint64_t exp) const {
    std::uint32_t r = reduce(1);
    std::uint32_t b = base;
    for (; exp; exp >>= 1, b = mul(b, b))
      if (exp & 1) r = mul(r, b);
    return r;
  }

  /// Multiplicative inverse via Fermat: a^(p-2).
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("PrimeModulus::inv: zero is not invertible");
    return pow(a, p_ - 2);
  }

  /// Canonical residue of a (possibly negative) 64-bit integer.
  std::uint32_t residue(std::int64_t v) const {
    std::int64_t r = v % p_;
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
  }

  friend bool operator==(const PrimeModulus& a, const PrimeModulus& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_ = 2;
  std::uint64_t magic_ = 0;  // floor(2^64 / p)
};

}  // namespace wlp
