#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "wlp/fp_matrix.hpp"
#include "wlp/verdict.hpp"

namespace wlp {

// The algebra throughout is A = K[X,Y,Z]/(X^d,Y^d,Z^d) over K = F_p, an
// Artinian Gorenstein complete intersection with socle degree s = 3d - 3.
// Ranks computed over F_p equal ranks over any field extension (rank is
// determined by minors), so deciding over the prime field is sound even
// though WLP is usually stated over an algebraically closed field.

/// Exponent triple of a monomial X^i Y^j Z^l.
struct Monomial {
  std::int64_t i = 0, j = 0, l = 0;
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;  // lexicographic
};

/// Monomial basis of A_m: all (i,j,l) with 0 <= i,j,l <= d-1 and
/// i + j + l = m, in lexicographic order. The order is part of the
/// contract: matrices built on it are identical across runs and platforms.
class MonomialBasis {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  MonomialBasis(std::int64_t d, std::int64_t degree) : d_(d), degree_(degree) {
    if (d < 1) throw std::invalid_argument("MonomialBasis: d must be >= 1");
    if (degree < 0) throw std::invalid_argument("MonomialBasis: degree must be >= 0");
    const std::int64_t e = d - 1;
    for (std::int64_t i = std::max<std::int64_t>(0, degree - 2 * e);
         i <= std::min(e, degree); ++i)
      for (std::int64_t j = std::max<std::int64_t>(0, degree - i - e);
           j <= std::min(e, degree - i); ++j)
        monomials_.push_back({i, j, degree - i - j});
  }

  std::int64_t d() const { return d_; }
  std::int64_t degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const Monomial& operator[](std::size_t k) const { return monomials_[k]; }
  const std::vector<Monomial>& monomials() const { return monomials_; }

  /// Position of m in the basis, or npos.
  std::size_t index_of(const Monomial& m) const {
    const auto it = std::lower_bound(monomials_.begin(), monomials_.end(), m);
    if (it == monomials_.end() || *it != m) return npos;
    return static_cast<std::size_t>(it - monomials_.begin());
  }

 private:
  std::int64_t d_, degree_;
  std::vector<Monomial> monomials_;
};

/// h(m) = dim_K A_m for m = 0..3d-3; zero outside that range.
struct HilbertFunction {
  std::int64_t d = 0;
  std::vector<std::int64_t> dims;

  std::int64_t socle_degree() const { return 3 * d - 3; }
  std::int64_t at(std::int64_t m) const {
    return (m >= 0 && m < static_cast<std::int64_t>(dims.size()))
               ? dims[static_cast<std::size_t>(m)]
               : 0;
  }
  friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;
};

/// Hilbert function of A by inclusion-exclusion over the three relations:
/// h(m) = C(m+2,2) - 3 C(m-d+2,2) + 3 C(m-2d+2,2) - C(m-3d+2,2), with
/// C(n,2) = 0 for n < 2. Agrees with direct monomial enumeration.
inline HilbertFunction hilbert_function(std::int64_t d) {
  if (d < 1) throw std::invalid_argument("hilbert_function: d must be >= 1");
  const auto choose2 = [](std::int64_t n) -> std::int64_t {
    return n >= 2 ? n * (n - 1) / 2 : 0;
  };
  HilbertFunction h;
  h.d = d;
  h.dims.reserve(static_cast<std::size_t>(3 * d - 2));
  for (std::int64_t m = 0; m <= 3 * d - 3; ++m)
    h.dims.push_back(choose2(m + 2) - 3 * choose2(m - d + 2) + 3 * choose2(m - 2 * d + 2) -
                     choose2(m - 3 * d + 2));
  return h;
}

/// Matrix of multiplication by X + Y + Z from A_m to A_{m+1}, columns
/// indexed by MonomialBasis(d, m) and rows by MonomialBasis(d, m+1). An
/// entry is 1 for each product monomial that survives the relations (no
/// exponent reaches d). Valid for 0 <= m <= 3d - 4.
///
/// X + Y + Z stands in for a general linear form: rescaling the variables
/// carries any form with all coefficients nonzero to X + Y + Z, and forms
/// with a zero coefficient are not general.
inline FpMatrix multiplication_matrix(std::int64_t d, PrimeModulus p, std::int64_t m) {
  if (d < 1) throw std::invalid_argument("multiplication_matrix: d must be >= 1");
  if (m < 0 || m > 3 * d - 4)
    throw std::invalid_argument("multiplication_matrix: m out of range [0, 3d-4]");
  const MonomialBasis src(d, m);
  const MonomialBasis dst(d, m + 1);
  FpMatrix mat(dst.size(), src.size(), p);
  for (std::size_t c = 0; c < src.size(); ++c) {
    const Monomial t = src[c];
    const Monomial images[3] = {{t.i + 1, t.j, t.l}, {t.i, t.j + 1, t.l}, {t.i, t.j, t.l + 1}};
    for (const Monomial& im : images) {
      if (im.i > d - 1 || im.j > d - 1 || im.l > d - 1) continue;  // killed by a relation
      mat.set(dst.index_of(im), c, 1);
    }
  }
  return mat;
}

/// Decide WLP from the definition: multiplication by a general linear form
/// A_m -> A_{m+1} must have maximal rank min(h(m), h(m+1)) for every
/// m = 0..3d-4. Every degree is checked in order; the witness is the
/// literal first failure. Duality of ranks around the middle degree is a
/// tested property, never a shortcut in this decision path.
inline WlpVerdict wlp_bruteforce(std::int64_t d, PrimeModulus p) {
  if (d < 1) throw std::invalid_argument("wlp_bruteforce: d must be >= 1");
  const HilbertFunction h = hilbert_function(d);
  for (std::int64_t m = 0; m + 1 <= h.socle_degree(); ++m) {
    const std::int64_t max_rank = std::min(h.at(m), h.at(m + 1));
    const auto r = static_cast<std::int64_t>(multiplication_matrix(d, p, m).rank());
    if (r < max_rank) return {false, FailingDegree{m, r, max_rank}};
  }
  return {true, {}};
}

}  // namespace wlp
