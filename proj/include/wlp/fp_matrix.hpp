#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wlp/fp.hpp"

namespace wlp {

/// Dense row-major matrix over F_p. Values are immutable in spirit: build,
/// then query. All operations are pure; rank() works on a copy.
class FpMatrix {
 public:
  FpMatrix(std::size_t rows, std::size_t cols, PrimeModulus mod)
      : rows_(rows), cols_(cols), mod_(mod), a_(rows * cols, 0) {}

  static FpMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                            PrimeModulus mod) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    FpMatrix m(r, c, mod);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("FpMatrix::from_rows: ragged rows");
      for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeModulus& modulus() const { return mod_; }

  std::uint32_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  void set(std::size_t r, std::size_t c, std::int64_t v) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("FpMatrix::set: index out of range");
    a_[r * cols_ + c] = mod_.residue(v);
  }

  FpMatrix transposed() const {
    FpMatrix t(cols_, rows_, mod_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.a_[c * rows_ + r] = a_[r * cols_ + c];
    return t;
  }

  /// Rank over F_p by Gaussian elimination. The pivot is the first nonzero
  /// entry in column order (exact arithmetic needs no pivoting heuristics);
  /// every multiply-add is reduced on the spot.
  ///
  /// The rank over F_p equals the rank over every extension field (rank is
  /// determined by the nonvanishing of minors), so callers whose statements
  /// live over an algebraic closure can compute here.
  std::size_t rank() const {
    std::vector<std::uint32_t> a = a_;
    const std::size_t R = rows_, C = cols_;
    const PrimeModulus mod = mod_;
    std::size_t rk = 0;
    for (std::size_t col = 0; col < C && rk < R; ++col) {
      std::size_t piv = rk;
      while (piv < R && a[piv * C + col] == 0) ++piv;
      if (piv == R) continue;
      if (piv != rk)
        std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(piv * C + col),
                         a.begin() + static_cast<std::ptrdiff_t>(piv * C + C),
                         a.begin() + static_cast<std::ptrdiff_t>(rk * C + col));
      const std::uint32_t pinv = mod.inv(a[rk * C + col]);
      const std::uint32_t* src = a.data() + rk * C;
      for (std::size_t r = rk + 1; r < R; ++r) {
        std::uint32_t* dst = a.data() + r * C;
        const std::uint32_t lead = dst[col];
        if (lead == 0) continue;
        dst[col] = 0;
        // dst += (p - lead/pivot) * src, entrywise from col+1 on
        const std::uint32_t g = mod.neg(mod.mul(lead, pinv));
        for (std::size_t j = col + 1; j < C; ++j)
          if (src[j] != 0) dst[j] = mod.mul_add(dst[j], g, src[j]);
      }
      ++rk;
    }
    return rk;
  }

 private:
  std::size_t rows_, cols_;
  PrimeModulus mod_;
  std::vector<std::uint32_t> a_;
};

inline std::size_t rank(const FpMatrix& m) { return m.rank(); }

}  // namespace wlp
